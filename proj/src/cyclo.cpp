#include "ghecke/cyclo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ghk {

namespace {

// Dense polynomials over Q, constant term first, no trailing zeros.
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    poly_trim(out);
    return out;
}

// Division with remainder; b must be nonzero.
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& rem) {
    q.assign(a.size(), Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        poly_trim(a);
    }
    poly_trim(q);
    rem = std::move(a);
}

struct FieldCtx {
    int r;
    int phi;
    Poly modulus;              // Phi_r, degree phi
    std::vector<Poly> redrow;  // zeta^(phi+k) reduced, k = 0..phi-2
};

Poly cyclotomic(int r, std::map<int, Poly>& memo) {
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
    // x^r - 1 divided by Phi_d for every proper divisor d of r.
    Poly p(r + 1, Rational(0));
    p[0] = -1;
    p[r] = 1;
    for (int d = 1; d < r; ++d) {
        if (r % d != 0) continue;
        Poly q, rem;
        poly_divmod(p, cyclotomic(d, memo), q, rem);
        if (!rem.empty()) throw std::logic_error("cyclotomic: nonzero remainder");
        p = std::move(q);
    }
    memo.emplace(r, p);
    return p;
}

const FieldCtx& field_ctx(int r) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<FieldCtx>> registry;
    static std::map<int, Poly> poly_memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(r);
    if (it != registry.end()) return *it->second;
    if (r < 1) throw std::invalid_argument("root order must be positive");
    auto ctx = std::make_unique<FieldCtx>();
    ctx->r = r;
    ctx->modulus = cyclotomic(r, poly_memo);
    ctx->phi = static_cast<int>(ctx->modulus.size()) - 1;
    // Rows zeta^(phi), zeta^(phi+1), ... in the power basis; enough for
    // both zeta_pow (exponents < r) and product reduction (< 2*phi-1).
    int nrows = std::max(r - 1, 2 * ctx->phi - 2) - ctx->phi + 1;
    Poly row(ctx->phi, Rational(0));
    for (int i = 0; i < ctx->phi; ++i) row[i] = -ctx->modulus[i];
    for (int k = 0; k < nrows; ++k) {
        ctx->redrow.push_back(row);
        // row <- row * zeta mod Phi
        Rational top = row[ctx->phi - 1];
        for (int i = ctx->phi - 1; i > 0; --i) row[i] = row[i - 1];
        row[0] = 0;
        for (int i = 0; i < ctx->phi; ++i) row[i] += top * ctx->redrow[0][i];
    }
    auto& slot = registry[r];
    slot = std::move(ctx);
    return *slot;
}

}  // namespace

int totient(int r) { return field_ctx(r).phi; }

const std::vector<Rational>& cyclotomic_poly(int r) { return field_ctx(r).modulus; }

Cyclo::Cyclo(int r, std::vector<Rational> coeffs) : r_(r), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != totient(r)) throw std::invalid_argument("coefficient vector has wrong length");
}

Cyclo Cyclo::rational(int r, const Rational& v) {
    std::vector<Rational> c(totient(r), Rational(0));
    c[0] = v;
    return Cyclo(r, std::move(c));
}

Cyclo Cyclo::zeta_pow(int r, long e) {
    const FieldCtx& ctx = field_ctx(r);
    long m = e % r;
    if (m < 0) m += r;
    std::vector<Rational> c(ctx.phi, Rational(0));
    if (m < ctx.phi) {
        c[m] = 1;
    } else {
        for (int i = 0; i < ctx.phi; ++i) c[i] = ctx.redrow[m - ctx.phi][i];
    }
    return Cyclo(r, std::move(c));
}

bool Cyclo::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclo::rational_value() const {
    if (!is_rational()) throw std::domain_error("value is not rational");
    return c_[0];
}

void Cyclo::promote_to(int r) {
    if (r_ == r) return;
    *this = rational(r, rational_value());
}

void Cyclo::align(Cyclo& a, Cyclo& b) {
    if (a.r_ == b.r_) return;
    if (a.is_rational())
        a.promote_to(b.r_);
    else if (b.is_rational())
        b.promote_to(a.r_);
    else
        throw field_mismatch("cyclotomic orders differ: " + std::to_string(a.r_) + " vs " + std::to_string(b.r_));
}

Cyclo Cyclo::operator-() const {
    Cyclo out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    Cyclo rhs = o;
    align(*this, rhs);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    Cyclo rhs = o;
    align(*this, rhs);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    Cyclo rhs = o;
    align(*this, rhs);
    const FieldCtx& ctx = field_ctx(r_);
    const int phi = ctx.phi;
    std::vector<Rational> prod(2 * phi - 1, Rational(0));
    for (int i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (rhs.c_[j] == 0) continue;
            prod[i + j] += c_[i] * rhs.c_[j];
        }
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + phi);
    for (int k = phi; k < 2 * phi - 1; ++k) {
        if (prod[k] == 0) continue;
        const Poly& row = ctx.redrow[k - phi];
        for (int i = 0; i < phi; ++i) out[i] += prod[k] * row[i];
    }
    c_ = std::move(out);
    return *this;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero in Q(zeta)");
    const FieldCtx& ctx = field_ctx(r_);
    // Extended Euclid for gcd(a, Phi_r) = 1 over Q[x].
    Poly a(c_);
    poly_trim(a);
    Poly b = ctx.modulus;
    Poly ua = {Rational(1)}, ub = {};
    while (!b.empty()) {
        Poly q, rem;
        poly_divmod(a, b, q, rem);
        Poly unew = ua;
        Poly qs = poly_mul(q, ub);
        if (unew.size() < qs.size()) unew.resize(qs.size(), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) unew[i] -= qs[i];
        poly_trim(unew);
        a = std::move(b);
        b = std::move(rem);
        ua = std::move(ub);
        ub = std::move(unew);
    }
    // a is now a nonzero constant gcd; ua/a is the inverse mod Phi.
    if (a.size() != 1) throw std::logic_error("Cyclo::inverse: gcd not constant");
    std::vector<Rational> out(ctx.phi, Rational(0));
    for (size_t i = 0; i < ua.size(); ++i) out[i] = ua[i] / a[0];
    return Cyclo(r_, std::move(out));
}

Cyclo& Cyclo::operator/=(const Cyclo& o) {
    Cyclo rhs = o;
    align(*this, rhs);
    return *this *= rhs.inverse();
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo acc = Cyclo::one(r_);
    Cyclo base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Cyclo::operator==(const Cyclo& o) const {
    if (r_ == o.r_) return c_ == o.c_;
    if (is_rational() && o.is_rational()) return c_[0] == o.c_[0];
    throw field_mismatch("comparing values from different cyclotomic fields");
}

std::string rational_str(const Rational& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string Cyclo::str() const {
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (i == 0) {
            out += rational_str(a);
        } else {
            if (a != 1) out += rational_str(a) + "*";
            out += i == 1 ? "z" : "z^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Cyclo& v) { return os << v.str(); }

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    for (char ch : text)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
            throw std::invalid_argument("bad rational literal: " + text);
    Rational v;
    if (v.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    v.canonicalize();
    return v;
}

Cyclo Cyclo::parse(int r, const std::string& text) {
    // Sum of signed terms; each term is RAT, RAT*z^K, or z^K.
    Cyclo out = Cyclo::zero(r);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty cyclotomic literal");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) {
            if (first) throw std::invalid_argument("empty cyclotomic literal");
            break;
        }
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in: " + text);
        }
        skip_ws();
        Rational coeff(1);
        bool saw_coeff = false;
        size_t start = i;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
        if (i > start) {
            coeff = parse_rational(text.substr(start, i - start));
            saw_coeff = true;
        }
        skip_ws();
        long deg = 0;
        bool saw_z = false;
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        if (i < text.size() && (text[i] == 'z' || text[i] == 'Z')) {
            saw_z = true;
            deg = 1;
            ++i;
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                size_t ds = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == ds) throw std::invalid_argument("missing exponent in: " + text);
                deg = std::stol(text.substr(ds, i - ds));
            }
        }
        if (!saw_coeff && !saw_z) throw std::invalid_argument("bad term in cyclotomic literal: " + text);
        Cyclo term = Cyclo::rational(r, sign * coeff);
        if (saw_z) term *= Cyclo::zeta_pow(r, deg);
        out += term;
        first = false;
    }
    return out;
}

}  // namespace ghk
