#pragma once

/* Exact symmetric-function arithmetic: truncations to N variables with
   integer coefficients. Equality of degree-<=N symmetric functions is
   faithfully decided in N variables, which is the equality contract used
   throughout. */

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "giambelli/shapes.hpp"

namespace giambelli {

/* Sparse polynomial in up to 16 variables with exact 64-bit integer
   coefficients; arithmetic throws std::overflow_error instead of
   wrapping. Exponents are packed one nibble per variable, so individual
   exponents are capped at 15 (plenty at desk scale, where total degree
   equals a box count). */
class SymPoly {
  public:
    static constexpr int kMaxVars = 16;
    static constexpr int kMaxExponent = 15;

    explicit SymPoly(int nvars);
    static SymPoly constant(int nvars, long long value);
    static SymPoly variable(int nvars, int index);  // x_index, 1-based

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    size_t term_count() const { return terms_.size(); }
    int max_degree() const;

    void add_term(const std::vector<int>& exponents, long long coeff);
    long long coeff(const std::vector<int>& exponents) const;

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly operator-() const;
    bool operator==(const SymPoly& o) const;

    /* Exchange the values of variables a and b (1-based). */
    SymPoly swap_variables(int a, int b) const;

    /* Terms sorted lexicographically by exponent vector (x1 first). */
    std::vector<std::pair<std::vector<int>, long long>> terms_sorted() const;
    std::string to_json() const;
    std::string to_string() const;

  private:
    void add_packed(uint64_t key, long long coeff);
    int nvars_ = 1;
    std::unordered_map<uint64_t, long long> terms_;
};

/* Skew Schur polynomial by direct enumeration of semistandard tableaux
   with entries in 1..nvars; the empty shape gives 1. Results are cached
   by normalized shape. */
SymPoly schur_poly(const SkewShape& s, int nvars);

/* Complete homogeneous h_k: 1 for k = 0, 0 for k < 0. */
SymPoly complete_h(int k, int nvars);

/* Elementary e_k: 1 for k = 0, 0 for k < 0 and for k > nvars. */
SymPoly elementary_e(int k, int nvars);

/* s_I * s_J == s_{I glue_right J} + s_{I glue_up J} in nvars variables. */
bool check_glue_identity(const SkewShape& I, const SkewShape& J, int nvars);

}  // namespace giambelli
