#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lndlab/errors.hpp"

namespace lndlab {

enum class MonomialOrder { lex, grevlex };

inline std::string order_name(MonomialOrder o) {
    return o == MonomialOrder::lex ? "lex" : "grevlex";
}

// Description of a polynomial (or Laurent) ring: ordered variables, the subset
// allowed negative exponents, and the monomial order used for canonical form.
// Shared immutably by every value built over it.
class RingDesc {
  public:
    RingDesc(std::vector<std::string> vars, MonomialOrder order,
             std::vector<bool> invertible)
        : vars_(std::move(vars)), invertible_(std::move(invertible)), order_(order) {
        if (invertible_.empty()) invertible_.assign(vars_.size(), false);
        if (invertible_.size() != vars_.size())
            throw InvalidSpec("invertible flags must align with the variable list");
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i].empty()) throw InvalidSpec("empty variable name");
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw InvalidSpec("duplicate variable name '" + vars_[i] + "'");
        }
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t size() const { return vars_.size(); }
    const std::string& var_name(std::size_t i) const { return vars_[i]; }
    bool is_invertible(std::size_t i) const { return invertible_[i]; }
    bool has_invertible() const {
        for (bool b : invertible_)
            if (b) return true;
        return false;
    }
    MonomialOrder order() const { return order_; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        return std::nullopt;
    }
    std::size_t require_index(const std::string& name) const {
        auto i = index_of(name);
        if (!i) throw UnknownVariable(name);
        return *i;
    }

    friend bool operator==(const RingDesc& a, const RingDesc& b) {
        return a.vars_ == b.vars_ && a.invertible_ == b.invertible_ && a.order_ == b.order_;
    }

  private:
    std::vector<std::string> vars_;
    std::vector<bool> invertible_;
    MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const RingDesc>;

inline RingPtr make_ring(std::vector<std::string> vars,
                         MonomialOrder order = MonomialOrder::grevlex,
                         const std::vector<std::string>& invertible = {}) {
    std::vector<bool> flags(vars.size(), false);
    for (const auto& name : invertible) {
        bool found = false;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) {
                flags[i] = true;
                found = true;
            }
        if (!found) throw UnknownVariable(name);
    }
    return std::make_shared<RingDesc>(std::move(vars), order, std::move(flags));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

// Exponent vector aligned with the ring's variable list. Exponents of
// non-invertible variables stay >= 0; all magnitudes stay below 2^31.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::int32_t> exps) : exps_(std::move(exps)) {}

    static constexpr std::int64_t kExpLimit = std::int64_t{1} << 31;

    std::size_t size() const { return exps_.size(); }
    std::int32_t exp(std::size_t i) const { return exps_[i]; }
    const std::vector<std::int32_t>& exps() const { return exps_; }

    bool is_one() const {
        for (auto e : exps_)
            if (e != 0) return false;
        return true;
    }

    std::int64_t total_degree() const {
        std::int64_t s = 0;
        for (auto e : exps_) s += e;
        return s;
    }

    Monomial& set(std::size_t i, std::int64_t e) {
        if (e >= kExpLimit || e <= -kExpLimit) throw ExponentOverflow();
        exps_[i] = static_cast<std::int32_t>(e);
        return *this;
    }

    Monomial times(const Monomial& o) const {
        Monomial r(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            r.set(i, std::int64_t{exps_[i]} + o.exps_[i]);
        return r;
    }

    // Componentwise quotient; caller guarantees divisibility where it matters.
    Monomial divided_by(const Monomial& o) const {
        Monomial r(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            r.set(i, std::int64_t{exps_[i]} - o.exps_[i]);
        return r;
    }

    Monomial pow(std::int64_t k) const {
        Monomial r(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            r.set(i, std::int64_t{exps_[i]} * k);
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.exps_.size());
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            r.set(i, std::max(a.exps_[i], b.exps_[i]));
        return r;
    }

    bool has_negative() const {
        for (auto e : exps_)
            if (e < 0) return true;
        return false;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps_ != b.exps_; }

  private:
    std::vector<std::int32_t> exps_;
};

// Three-way comparison under the given order; variables earlier in the ring's
// list take precedence. Returns <0, 0, >0 like strcmp.
inline int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (order == MonomialOrder::lex) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
        }
        return 0;
    }
    // grevlex: total degree first, then the rightmost difference decides
    // with the smaller exponent winning.
    std::int64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
    }
    return 0;
}

struct MonomialDescending {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare(a, b, order) > 0;
    }
};

}  // namespace lndlab
