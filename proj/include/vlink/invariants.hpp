#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "vlink/covering.hpp"

namespace vlink {

class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(int exp, int64_t coeff = 1);

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly times_monomial(int exp, int64_t coeff) const;

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const LaurentPoly&) const = default;

    // Ascending exponents in variable A, e.g. "-A^-4 + 2 - A^4"; "0" when zero.
    std::string str() const;

private:
    std::map<int, int64_t> terms_;  // exponent -> nonzero coefficient
};

int64_t writhe(const ExtendedGaussCode& code);

// Sum of signs of odd crossings; knots only.
int64_t odd_writhe(const ExtendedGaussCode& code);

// Doubled linking number: sum of signs of nonself classical crossings
// between components i and j (2 x lk, exact).
int64_t linking2(const ExtendedGaussCode& code, int i, int j);

// Linking number of the 2-component covering of a knot with a cut system;
// always an integer and equal to the odd writhe.
int64_t lk_n(const ExtendedGaussCode& code);

// |lambda(i,j)|: crossings between i and j with the over passage on i,
// signs adjusted by the virtual orientation. Even diagrams only.
int64_t lambda_abs(const ExtendedGaussCode& code, int i, int j);

// |nu(i,j)|: as lambda but adjusted by the cut orientation of the code's
// cut system. Even diagrams with a cut system only.
int64_t nu_abs(const ExtendedGaussCode& code, int i, int j);

// Q_ij: the multiset {lk~(D^i_1,D^j_1), lk~(D^i_1,D^j_2)} as sorted doubled
// integers. Even oriented diagrams with a cut system, i != j.
std::array<int64_t, 2> q_set2(const ExtendedGaussCode& code, int i, int j);

// Doubled lk~(D^i_1, D^i_2).
int64_t self_pair_link2(const ExtendedGaussCode& code, int i);

// Effective signs of cover crossings between D^i_k and the two lifts of
// component j, summed over crossings whose over passage lies in D^i_k.
// Its absolute value reproduces |nu(i,j)| from the covering alone.
int64_t cover_over_sum(const OrientedCover& oc, int i, int j, int k);

inline constexpr int kBracketChordCap = 16;

// Kauffman bracket state sum normalized by (-A^3)^(-writhe); virtual
// passages are irrelevant. Throws TooLarge above the cap.
LaurentPoly f_polynomial(const ExtendedGaussCode& code, int cap = kBracketChordCap);

// Doubled linking numbers between all pairs of components.
std::map<std::pair<int, int>, int64_t> linking_matrix2(const ExtendedGaussCode& code);

// Everything a move walk preserves about a covering, with lifted-component
// labels canonicalized up to the per-base swap.
struct CoverInvariantVector {
    std::vector<int> lifts_per_base;
    bool normal = true;
    std::vector<int64_t> linking_canonical;
    std::optional<LaurentPoly> f;  // present when the cover is within f_cap chords
    bool operator==(const CoverInvariantVector&) const = default;
};
CoverInvariantVector cover_invariant_vector(const CoverCode& cover, int f_cap = 14);

struct InvariantReport {
    int components = 0;
    std::vector<bool> component_even;
    bool even = true;
    bool normal = true;
    bool cut_system = false;         // of the cut set the cover section used
    bool used_canonical_cuts = false;
    int64_t writhe = 0;
    std::optional<int64_t> odd_writhe;  // knots
    std::map<std::pair<int, int>, int64_t> linking2;  // 0-based pairs, i < j
    std::optional<int64_t> lk_n;     // knots with a cut system

    struct Cover {
        int components = 0;
        bool normal = true;
        std::vector<std::string> labels;  // per cover component, "i.k" 1-based
        std::map<std::pair<int, int>, int64_t> linking2;  // cover component pairs
    };
    std::optional<Cover> cover;

    std::map<std::pair<int, int>, int64_t> lambda_abs;  // even diagrams
    std::map<std::pair<int, int>, int64_t> nu_abs;
    std::map<std::pair<int, int>, std::array<int64_t, 2>> q_sets2;
    std::map<int, int64_t> self_pair2;
    std::optional<LaurentPoly> f_poly;
};

InvariantReport compute_report(const ExtendedGaussCode& code, int f_cap = kBracketChordCap);

}  // namespace vlink
