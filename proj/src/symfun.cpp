#include "giambelli/symfun.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace giambelli {

namespace {

long long checked_add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("coefficient overflow in addition");
    return out;
}

long long checked_mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("coefficient overflow in multiplication");
    return out;
}

/* Variable v (0-based) occupies nibble 15 - v, so unsigned comparison of
   keys is lexicographic comparison of exponent vectors. */
uint64_t nibble_shift(int v) { return static_cast<uint64_t>(4 * (15 - v)); }

int key_degree(uint64_t key) {
    int total = 0;
    while (key) {
        total += static_cast<int>(key & 0xf);
        key >>= 4;
    }
    return total;
}

std::vector<int> unpack(uint64_t key, int nvars) {
    std::vector<int> exps(nvars);
    for (int v = 0; v < nvars; ++v) exps[v] = static_cast<int>((key >> nibble_shift(v)) & 0xf);
    return exps;
}

}  // namespace

SymPoly::SymPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > kMaxVars)
        throw std::invalid_argument("nvars must be between 1 and 16");
}

SymPoly SymPoly::constant(int nvars, long long value) {
    SymPoly out(nvars);
    if (value != 0) out.terms_.emplace(0, value);
    return out;
}

SymPoly SymPoly::variable(int nvars, int index) {
    SymPoly out(nvars);
    if (index < 1 || index > nvars) throw std::out_of_range("variable index");
    out.terms_.emplace(uint64_t{1} << nibble_shift(index - 1), 1);
    return out;
}

bool SymPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int SymPoly::max_degree() const {
    int out = 0;
    for (auto& [key, coeff] : terms_) out = std::max(out, key_degree(key));
    return out;
}

void SymPoly::add_packed(uint64_t key, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

void SymPoly::add_term(const std::vector<int>& exponents, long long coeff) {
    if (static_cast<int>(exponents.size()) != nvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    uint64_t key = 0;
    for (int v = 0; v < nvars_; ++v) {
        if (exponents[v] < 0 || exponents[v] > kMaxExponent)
            throw std::overflow_error("exponent outside supported range");
        key |= static_cast<uint64_t>(exponents[v]) << nibble_shift(v);
    }
    add_packed(key, coeff);
}

long long SymPoly::coeff(const std::vector<int>& exponents) const {
    if (static_cast<int>(exponents.size()) != nvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    uint64_t key = 0;
    for (int v = 0; v < nvars_; ++v)
        key |= static_cast<uint64_t>(exponents[v]) << nibble_shift(v);
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    for (auto& [key, coeff] : o.terms_) add_packed(key, coeff);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    for (auto& [key, coeff] : o.terms_) add_packed(key, checked_mul(coeff, -1));
    return *this;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    SymPoly out = *this;
    out += o;
    return out;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
    SymPoly out = *this;
    out -= o;
    return out;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    SymPoly out(nvars_);
    if (is_zero() || o.is_zero()) return out;
    if (max_degree() + o.max_degree() > kMaxExponent)
        throw std::overflow_error("product degree exceeds packed exponent range");
    for (auto& [ka, ca] : terms_)
        for (auto& [kb, cb] : o.terms_) out.add_packed(ka + kb, checked_mul(ca, cb));
    return out;
}

SymPoly SymPoly::operator-() const {
    SymPoly out(nvars_);
    for (auto& [key, coeff] : terms_) out.terms_.emplace(key, checked_mul(coeff, -1));
    return out;
}

bool SymPoly::operator==(const SymPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

SymPoly SymPoly::swap_variables(int a, int b) const {
    if (a < 1 || a > nvars_ || b < 1 || b > nvars_) throw std::out_of_range("variable index");
    SymPoly out(nvars_);
    for (auto& [key, coeff] : terms_) {
        uint64_t ea = (key >> nibble_shift(a - 1)) & 0xf;
        uint64_t eb = (key >> nibble_shift(b - 1)) & 0xf;
        uint64_t swapped = key & ~(uint64_t{0xf} << nibble_shift(a - 1)) &
                           ~(uint64_t{0xf} << nibble_shift(b - 1));
        swapped |= ea << nibble_shift(b - 1);
        swapped |= eb << nibble_shift(a - 1);
        out.terms_.emplace(swapped, coeff);
    }
    return out;
}

std::vector<std::pair<std::vector<int>, long long>> SymPoly::terms_sorted() const {
    std::vector<std::pair<uint64_t, long long>> keyed(terms_.begin(), terms_.end());
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::pair<std::vector<int>, long long>> out;
    out.reserve(keyed.size());
    for (auto& [key, coeff] : keyed) out.emplace_back(unpack(key, nvars_), coeff);
    return out;
}

std::string SymPoly::to_json() const {
    nlohmann::json j;
    j["nvars"] = nvars_;
    j["terms"] = nlohmann::json::array();
    for (auto& [exps, coeff] : terms_sorted()) {
        nlohmann::json term;
        term["exp"] = exps;
        term["coef"] = coeff;
        j["terms"].push_back(term);
    }
    return j.dump();
}

std::string SymPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [exps, coeff] : terms_sorted()) {
        if (!first) out << (coeff >= 0 ? " + " : " - ");
        else if (coeff < 0) out << "-";
        first = false;
        long long mag = coeff < 0 ? -coeff : coeff;
        bool has_var = std::any_of(exps.begin(), exps.end(), [](int e) { return e > 0; });
        if (mag != 1 || !has_var) out << mag;
        for (int v = 0; v < nvars_; ++v) {
            if (exps[v] == 0) continue;
            out << "x" << (v + 1);
            if (exps[v] > 1) out << "^" << exps[v];
        }
    }
    return out.str();
}

namespace {

struct SsytBox {
    int left = -1;   // index of the box to the left in the same row
    int above = -1;  // index of the box directly above
};

SymPoly enumerate_ssyt(const SkewShape& s, int nvars) {
    SymPoly out(nvars);
    std::vector<BoxCoord> boxes = s.boxes();  // row-major
    int n = static_cast<int>(boxes.size());
    if (n == 0) return SymPoly::constant(nvars, 1);
    if (n > SymPoly::kMaxExponent)
        throw std::overflow_error("shape too large for the packed representation");
    std::vector<SsytBox> info(n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            if (boxes[j].row == boxes[k].row && boxes[j].col == boxes[k].col - 1)
                info[k].left = j;
            if (boxes[j].row == boxes[k].row - 1 && boxes[j].col == boxes[k].col)
                info[k].above = j;
        }

    std::vector<int> value(n, 0);
    std::vector<int> counts(nvars, 0);
    auto recurse = [&](auto&& self, int k) -> void {
        if (k == n) {
            out.add_term(counts, 1);
            return;
        }
        int lo = 1;
        if (info[k].left >= 0) lo = std::max(lo, value[info[k].left]);
        if (info[k].above >= 0) lo = std::max(lo, value[info[k].above] + 1);
        for (int v = lo; v <= nvars; ++v) {
            value[k] = v;
            ++counts[v - 1];
            self(self, k + 1);
            --counts[v - 1];
        }
        value[k] = 0;
    };
    recurse(recurse, 0);
    return out;
}

}  // namespace

SymPoly schur_poly(const SkewShape& s, int nvars) {
    if (nvars < 1 || nvars > SymPoly::kMaxVars)
        throw std::invalid_argument("nvars must be between 1 and 16");
    static std::map<std::pair<std::string, int>, SymPoly> cache;
    SkewShape norm = s.normalized();
    auto cache_key = std::make_pair(norm.to_string(), nvars);
    auto it = cache.find(cache_key);
    if (it != cache.end()) return it->second;
    SymPoly out = enumerate_ssyt(norm, nvars);
    cache.emplace(std::move(cache_key), out);
    return out;
}

SymPoly complete_h(int k, int nvars) {
    if (k < 0) return SymPoly(nvars);
    if (k == 0) return SymPoly::constant(nvars, 1);
    std::vector<int> row = {k};
    return schur_poly(SkewShape(Partition(row), Partition()), nvars);
}

SymPoly elementary_e(int k, int nvars) {
    if (k < 0) return SymPoly(nvars);
    if (k == 0) return SymPoly::constant(nvars, 1);
    if (k > nvars) return SymPoly(nvars);
    std::vector<int> col(k, 1);
    return schur_poly(SkewShape(Partition(col), Partition()), nvars);
}

bool check_glue_identity(const SkewShape& I, const SkewShape& J, int nvars) {
    if (I.empty() || J.empty())
        throw std::invalid_argument("glue identity needs nonempty operands");
    SymPoly lhs = schur_poly(I, nvars) * schur_poly(J, nvars);
    SymPoly rhs = schur_poly(glue_right(I, J), nvars) + schur_poly(glue_up(I, J), nvars);
    return lhs == rhs;
}

}  // namespace giambelli
