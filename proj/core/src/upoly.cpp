#include "symreg/upoly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace symreg::upoly {

IntPoly IntPoly::one_minus_power(int k) {
    if (k < 1) throw std::invalid_argument("one_minus_power: exponent must be >= 1");
    IntPoly p;
    p.c.assign(static_cast<size_t>(k) + 1, Int(0));
    p.c[0] = 1;
    p.c[static_cast<size_t>(k)] = -1;
    return p;
}

Int IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c.size())) return Int(0);
    return c[static_cast<size_t>(k)];
}

void IntPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.normalize();
    return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly::zero();
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
}

std::optional<IntPoly> poly_exact_div(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("poly_exact_div: division by zero polynomial");
    if (num.is_zero()) return IntPoly::zero();
    if (num.degree() < den.degree()) return std::nullopt;

    // Long division over Q.
    std::vector<mpq_class> rem(num.c.begin(), num.c.end());
    const int dn = num.degree(), dd = den.degree();
    const mpq_class lead(den.c.back());
    std::vector<mpq_class> quot(static_cast<size_t>(dn - dd) + 1, mpq_class(0));
    for (int k = dn - dd; k >= 0; --k) {
        mpq_class q = rem[static_cast<size_t>(k + dd)] / lead;
        q.canonicalize();
        quot[static_cast<size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<size_t>(k + j)] -= q * mpq_class(den.c[static_cast<size_t>(j)]);
        }
    }
    for (const auto& r : rem) {
        if (r != 0) return std::nullopt;  // nonzero remainder
    }
    IntPoly out;
    out.c.reserve(quot.size());
    for (const auto& q : quot) {
        if (q.get_den() != 1) return std::nullopt;  // non-integer quotient
        out.c.push_back(q.get_num());
    }
    out.normalize();
    return out;
}

const IntPoly& cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: index must be >= 1");
    static std::map<int, IntPoly> memo;
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);

    auto compute = [](auto&& self, int m) -> const IntPoly& {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        // t^m - 1 divided by Phi_e for every proper divisor e of m.
        IntPoly num;
        num.c.assign(static_cast<size_t>(m) + 1, Int(0));
        num.c[0] = -1;
        num.c[static_cast<size_t>(m)] = 1;
        for (int e = 1; e < m; ++e) {
            if (m % e != 0) continue;
            auto q = poly_exact_div(num, self(self, e));
            if (!q) throw std::logic_error("cyclotomic: internal division failure");
            num = std::move(*q);
        }
        return memo.emplace(m, std::move(num)).first->second;
    };
    return compute(compute, d);
}

HilbertResult hilbert_quotient(const std::vector<int>& degrees) {
    const int n = static_cast<int>(degrees.size());
    if (n < 1) throw std::invalid_argument("hilbert_quotient: empty degree list");
    for (int d : degrees) {
        if (d < 1) throw std::invalid_argument("hilbert_quotient: degrees must be >= 1");
    }
    IntPoly num = IntPoly::one();
    for (int d : degrees) num = poly_mul(num, IntPoly::one_minus_power(d));
    IntPoly den = IntPoly::one();
    for (int i = 1; i <= n; ++i) den = poly_mul(den, IntPoly::one_minus_power(i));

    HilbertResult res;
    auto q = poly_exact_div(num, den);
    if (!q) return res;  // integral == false
    res.integral = true;
    res.quotient = std::move(*q);
    res.nonnegative = true;
    res.coeff_sum = 0;
    for (const auto& ck : res.quotient.c) {
        if (ck < 0) res.nonnegative = false;
        res.coeff_sum += ck;
    }
    return res;
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < p.c.size(); ++k) {
        const Int& ck = p.c[k];
        if (ck == 0) continue;
        Int mag = abs(ck);
        if (first) {
            if (ck < 0) os << "-";
            first = false;
        } else {
            os << (ck < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace symreg::upoly
