#include "symreg/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace symreg::mpoly {

int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

long weighted_degree(const Monomial& m, const std::vector<int>& weights) {
    long d = 0;
    for (size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * weights[i];
    return d;
}

MPoly MPoly::zero(int nvars) {
    MPoly p;
    p.nvars = nvars;
    p.weights.assign(static_cast<size_t>(nvars), 1);
    return p;
}

MPoly MPoly::zero_weighted(int nvars, std::vector<int> weights) {
    if (static_cast<int>(weights.size()) != nvars) {
        throw std::invalid_argument("MPoly: weight count must match variable count");
    }
    MPoly p;
    p.nvars = nvars;
    p.weights = std::move(weights);
    return p;
}

MPoly MPoly::constant(int nvars, const Rat& c) {
    MPoly p = zero(nvars);
    if (c != 0) p.terms.emplace(Monomial(static_cast<size_t>(nvars), 0), c);
    return p;
}

MPoly MPoly::variable(int nvars, int index1) {
    if (index1 < 1 || index1 > nvars) throw std::invalid_argument("MPoly::variable: index out of range");
    MPoly p = zero(nvars);
    Monomial m(static_cast<size_t>(nvars), 0);
    m[static_cast<size_t>(index1 - 1)] = 1;
    p.terms.emplace(std::move(m), Rat(1));
    return p;
}

bool MPoly::is_constant() const {
    if (terms.empty()) return true;
    return terms.size() == 1 && total_degree(terms.begin()->first) == 0;
}

std::optional<long> MPoly::homogeneous_degree() const {
    std::optional<long> deg;
    for (const auto& [m, c] : terms) {
        long d = weighted_degree(m, weights);
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            return std::nullopt;
        }
    }
    return deg;  // nullopt for the zero polynomial
}

static void require_compatible(const MPoly& a, const MPoly& b) {
    if (a.nvars != b.nvars || a.weights != b.weights) {
        throw std::invalid_argument("MPoly: operands live in different rings");
    }
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    require_compatible(a, b);
    MPoly r = a;
    for (const auto& [m, c] : b.terms) {
        auto it = r.terms.find(m);
        if (it == r.terms.end()) {
            r.terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

MPoly operator-(const MPoly& a) {
    MPoly r = a;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    require_compatible(a, b);
    MPoly r = MPoly::zero_weighted(a.nvars, a.weights);
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            Monomial m(static_cast<size_t>(a.nvars));
            for (int i = 0; i < a.nvars; ++i) m[static_cast<size_t>(i)] = ma[static_cast<size_t>(i)] + mb[static_cast<size_t>(i)];
            Rat c = ca * cb;
            auto it = r.terms.find(m);
            if (it == r.terms.end()) {
                r.terms.emplace(std::move(m), std::move(c));
            } else {
                it->second += c;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    }
    return r;
}

MPoly operator*(const Rat& c, const MPoly& a) {
    if (c == 0) return MPoly::zero_weighted(a.nvars, a.weights);
    MPoly r = a;
    for (auto& [m, v] : r.terms) v *= c;
    return r;
}

MPoly pow(const MPoly& a, int k) {
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    MPoly r = MPoly::zero_weighted(a.nvars, a.weights);
    r.terms.emplace(Monomial(static_cast<size_t>(a.nvars), 0), Rat(1));
    if (k == 0) return r;
    MPoly base = a;
    int e = k;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

MPoly elementary(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("elementary: index out of range");
    MPoly p = MPoly::zero(n);
    // enumerate all i-element subsets of {0..n-1}
    std::vector<int> idx(static_cast<size_t>(i));
    for (int k = 0; k < i; ++k) idx[static_cast<size_t>(k)] = k;
    while (true) {
        Monomial m(static_cast<size_t>(n), 0);
        for (int k : idx) m[static_cast<size_t>(k)] = 1;
        p.terms.emplace(std::move(m), Rat(1));
        // next combination
        int k = i - 1;
        while (k >= 0 && idx[static_cast<size_t>(k)] == n - i + k) --k;
        if (k < 0) break;
        ++idx[static_cast<size_t>(k)];
        for (int j = k + 1; j < i; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return p;
}

MPoly power_sum_poly(int n, int a) {
    if (a < 1) throw std::invalid_argument("power_sum_poly: exponent must be >= 1");
    MPoly p = MPoly::zero(n);
    for (int i = 0; i < n; ++i) {
        Monomial m(static_cast<size_t>(n), 0);
        m[static_cast<size_t>(i)] = a;
        p.terms.emplace(std::move(m), Rat(1));
    }
    return p;
}

MPoly vandermonde(int n) {
    if (n < 2) throw std::invalid_argument("vandermonde: need at least two variables");
    MPoly p = MPoly::constant(n, 1);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            p = p * (MPoly::variable(n, j) - MPoly::variable(n, i));
        }
    }
    return p;
}

std::vector<int> sym_weights(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
    return w;
}

MPoly sym_zero(int n) { return MPoly::zero_weighted(n, sym_weights(n)); }

MPoly sym_constant(int n, const Rat& c) {
    MPoly p = sym_zero(n);
    if (c != 0) p.terms.emplace(Monomial(static_cast<size_t>(n), 0), c);
    return p;
}

MPoly sym_e(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("sym_e: index out of range");
    MPoly p = sym_zero(n);
    Monomial m(static_cast<size_t>(n), 0);
    m[static_cast<size_t>(i - 1)] = 1;
    p.terms.emplace(std::move(m), Rat(1));
    return p;
}

MPoly expand_sym(const MPoly& s, int n) {
    if (s.nvars != n) throw std::invalid_argument("expand_sym: variable count mismatch");
    // cache e_i^k as needed
    std::vector<std::vector<MPoly>> powers(static_cast<size_t>(n) + 1);
    auto epow = [&](int i, int k) -> const MPoly& {
        auto& row = powers[static_cast<size_t>(i)];
        if (row.empty()) row.push_back(MPoly::constant(n, 1));
        while (static_cast<int>(row.size()) <= k) {
            if (row.size() == 1) {
                row.push_back(elementary(n, i));
            } else {
                row.push_back(row.back() * elementary(n, i));
            }
        }
        return row[static_cast<size_t>(k)];
    };
    MPoly out = MPoly::zero(n);
    for (const auto& [m, c] : s.terms) {
        MPoly term = MPoly::constant(n, c);
        for (int i = 1; i <= n; ++i) {
            int k = m[static_cast<size_t>(i - 1)];
            if (k > 0) term = term * epow(i, k);
        }
        out = out + term;
    }
    return out;
}

MPoly swap_adjacent(const MPoly& p, int i) {
    if (i < 1 || i >= p.nvars) throw std::invalid_argument("swap_adjacent: index out of range");
    MPoly r = MPoly::zero_weighted(p.nvars, p.weights);
    for (const auto& [m, c] : p.terms) {
        Monomial s = m;
        std::swap(s[static_cast<size_t>(i - 1)], s[static_cast<size_t>(i)]);
        r.terms.emplace(std::move(s), c);
    }
    return r;
}

bool is_symmetric(const MPoly& p) {
    for (int i = 1; i < p.nvars; ++i) {
        if (!(swap_adjacent(p, i) == p)) return false;
    }
    return true;
}

bool is_alternating(const MPoly& p) {
    if (p.nvars < 2) return false;
    for (int i = 1; i < p.nvars; ++i) {
        if (!(swap_adjacent(p, i) == -p)) return false;
    }
    return true;
}

std::pair<MPoly, MPoly> specht_s22_pair(const MPoly& h, const MPoly& hp) {
    if (h.nvars != 4 || hp.nvars != 4) {
        throw std::invalid_argument("specht_s22_pair: ambient dimension must be 4");
    }
    const MPoly H = expand_sym(h, 4);
    const MPoly HP = expand_sym(hp, 4);
    auto hd = H.homogeneous_degree();
    auto hpd = HP.homogeneous_degree();
    if (!H.is_zero() && !hd) throw std::invalid_argument("specht_s22_pair: h is not homogeneous");
    if (!HP.is_zero() && !hpd) throw std::invalid_argument("specht_s22_pair: hp is not homogeneous");
    if (!H.is_zero() && !HP.is_zero() && *hd != *hpd + 2) {
        throw std::invalid_argument("specht_s22_pair: deg h must equal deg hp + 2");
    }
    if (H.is_zero() && HP.is_zero()) {
        throw std::invalid_argument("specht_s22_pair: h and hp cannot both vanish");
    }
    auto x = [](int i) { return MPoly::variable(4, i); };
    auto sq = [&](int i) { return x(i) * x(i); };
    MPoly g1 = H * ((x(1) - x(2)) * (x(3) - x(4))) + HP * ((sq(1) - sq(2)) * (sq(3) - sq(4)));
    MPoly g2 = H * ((x(1) - x(3)) * (x(2) - x(4))) + HP * ((sq(1) - sq(3)) * (sq(2) - sq(4)));
    return {std::move(g1), std::move(g2)};
}

// ---------------- text format ----------------

static std::string format_coeff(const Rat& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

std::string format_mpoly(const MPoly& p, char prefix) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest monomial first for a conventional leading term
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_var = total_degree(m) > 0;
        bool printed = false;
        if (!has_var || mag != 1) {
            os << format_coeff(mag);
            printed = true;
        }
        for (int i = 0; i < p.nvars; ++i) {
            int e = m[static_cast<size_t>(i)];
            if (e == 0) continue;
            if (printed) os << "*";
            os << prefix << (i + 1);
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

namespace {

// Minimal recursive-descent parser for the polynomial text format.
struct Parser {
    const std::string& s;
    size_t pos = 0;
    int nvars;
    char prefix;

    Parser(const std::string& text, int n, char pfx) : s(text), nvars(n), prefix(pfx) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) + ": " + what);
    }

    long parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected a number");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000000L) fail("number too large");
            ++pos;
        }
        return v;
    }

    MPoly make_ring_zero() {
        return prefix == 'e' ? sym_zero(nvars) : MPoly::zero(nvars);
    }
    MPoly make_ring_const(const Rat& c) {
        MPoly p = make_ring_zero();
        if (c != 0) p.terms.emplace(Monomial(static_cast<size_t>(nvars), 0), c);
        return p;
    }

    MPoly parse_expr() {
        bool neg = false;
        skip_ws();
        if (accept('-')) neg = true;
        else accept('+');
        MPoly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (accept('+')) {
                acc = acc + parse_term();
            } else if (accept('-')) {
                acc = acc - parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    MPoly parse_term() {
        MPoly acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    MPoly parse_factor() {
        MPoly base = parse_base();
        if (accept('^')) {
            long e = parse_uint();
            if (e > 512) fail("exponent too large");
            base = pow(base, static_cast<int>(e));
        }
        return base;
    }

    MPoly parse_base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            MPoly inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = parse_uint();
            if (accept('/')) {
                long den = parse_uint();
                if (den == 0) fail("zero denominator");
                Rat q(num, den);
                q.canonicalize();
                return make_ring_const(q);
            }
            return make_ring_const(Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (c != prefix) fail(std::string("unexpected variable letter '") + c + "', expected '" + prefix + "'");
            ++pos;
            long idx = parse_uint();
            if (idx < 1 || idx > nvars) fail("variable index out of range");
            MPoly v = make_ring_zero();
            Monomial m(static_cast<size_t>(nvars), 0);
            m[static_cast<size_t>(idx - 1)] = 1;
            v.terms.emplace(std::move(m), Rat(1));
            return v;
        }
        fail("unexpected character");
    }
};

}  // namespace

MPoly parse_mpoly(const std::string& text, int nvars, char prefix) {
    Parser p(text, nvars, prefix);
    MPoly out = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

std::pair<MPoly, char> parse_mpoly_auto(const std::string& text) {
    // detect the variable letter and the highest index
    char prefix = 0;
    int maxidx = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        if (std::isalpha(static_cast<unsigned char>(text[i]))) {
            if (prefix == 0) prefix = text[i];
            if (text[i] != prefix) {
                throw std::invalid_argument("polynomial parse error: mixed variable letters");
            }
            size_t j = i + 1;
            int idx = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                idx = idx * 10 + (text[j] - '0');
                ++j;
            }
            maxidx = std::max(maxidx, idx);
            i = j - 1;
        }
    }
    if (prefix == 0) prefix = 'x';
    return {parse_mpoly(text, maxidx, prefix), prefix};
}

}  // namespace symreg::mpoly
