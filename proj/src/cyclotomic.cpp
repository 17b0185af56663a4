#include "rdcert/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace rdcert::cyclo {

namespace {

// exact division of a by the monic-up-to-sign divisor b, both over Z
std::vector<long long> poly_div_exact(std::vector<long long> a, const std::vector<long long>& b) {
    std::vector<long long> q(a.size() - b.size() + 1, 0);
    long long lead = b.back();
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        long long c = a[i + b.size() - 1] / lead;
        q[i] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    for (long long r : a)
        if (r != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    return q;
}

std::vector<long long> compute_cyclotomic(std::uint32_t m) {
    // x^m - 1 divided by Phi_d for every proper divisor d
    std::vector<long long> poly(m + 1, 0);
    poly[0] = -1;
    poly[m] = 1;
    for (std::uint32_t d = 1; d < m; ++d) {
        if (m % d == 0) poly = poly_div_exact(std::move(poly), cyclotomic_polynomial(d));
    }
    return poly;
}

} // namespace

const std::vector<long long>& cyclotomic_polynomial(std::uint32_t m) {
    static std::mutex mutex;
    static std::map<std::uint32_t, std::vector<long long>> cache;
    if (m == 0) throw std::domain_error("cyclotomic_polynomial: order must be positive");
    {
        std::scoped_lock lock(mutex);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    auto poly = (m == 1) ? std::vector<long long>{-1, 1} : compute_cyclotomic(m);
    std::scoped_lock lock(mutex);
    return cache.emplace(m, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(std::uint32_t order) : order_(order) {
    if (order == 0) throw std::domain_error("Cyclotomic: order must be positive");
    coeffs_.assign(cyclotomic_polynomial(order).size() - 1, 0);
}

void Cyclotomic::reduce_from_power_basis(std::vector<long long> power) {
    const auto& phi_poly = cyclotomic_polynomial(order_);
    const std::size_t deg = phi_poly.size() - 1;
    if (power.size() < deg) power.resize(deg, 0);
    for (std::size_t i = power.size(); i-- > deg;) {
        long long c = power[i];
        if (c == 0) continue;
        power[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) power[i - deg + j] -= c * phi_poly[j];
    }
    power.resize(deg);
    coeffs_ = std::move(power);
}

Cyclotomic Cyclotomic::integer(std::uint32_t order, long long v) {
    Cyclotomic c(order);
    if (!c.coeffs_.empty())
        c.coeffs_[0] = v;
    else if (v != 0)
        throw std::logic_error("cyclotomic basis is empty");
    return c;
}

Cyclotomic Cyclotomic::root_power(std::uint32_t order, std::uint64_t k) {
    Cyclotomic c(order);
    std::vector<long long> power(order, 0);
    power[k % order] = 1;
    c.reduce_from_power_basis(std::move(power));
    return c;
}

Cyclotomic Cyclotomic::from_power_basis(std::uint32_t order, std::vector<long long> power) {
    Cyclotomic c(order);
    if (power.size() > order) {
        for (std::size_t i = order; i < power.size(); ++i) power[i % order] += power[i];
        power.resize(order);
    }
    c.reduce_from_power_basis(std::move(power));
    return c;
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](long long c) { return c == 0; });
}

bool Cyclotomic::is_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

long long Cyclotomic::to_integer() const {
    if (!is_integer()) throw std::domain_error("Cyclotomic::to_integer: value is not a rational integer");
    return coeffs_.empty() ? 0 : coeffs_[0];
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (order_ != o.order_) throw std::domain_error("Cyclotomic: mixed orders (use to_order)");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (order_ != o.order_) throw std::domain_error("Cyclotomic: mixed orders (use to_order)");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Cyclotomic r = *this;
    r += o;
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    Cyclotomic r = *this;
    r -= o;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (order_ != o.order_) throw std::domain_error("Cyclotomic: mixed orders (use to_order)");
    std::vector<long long> conv(coeffs_.size() + o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) conv[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    Cyclotomic r(order_);
    r.reduce_from_power_basis(std::move(conv));
    return r;
}

Cyclotomic Cyclotomic::operator*(long long s) const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

Cyclotomic Cyclotomic::operator-() const {
    return *this * -1;
}

Cyclotomic Cyclotomic::conjugate() const {
    std::vector<long long> power(order_, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) power[(order_ - i) % order_] += coeffs_[i];
    Cyclotomic r(order_);
    r.reduce_from_power_basis(std::move(power));
    return r;
}

Cyclotomic Cyclotomic::to_order(std::uint32_t M) const {
    if (M % order_ != 0) throw std::domain_error("Cyclotomic::to_order: target not a multiple");
    if (M == order_) return *this;
    std::uint32_t step = M / order_;
    std::vector<long long> power(M, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) power[i * step] += coeffs_[i];
    Cyclotomic r(M);
    r.reduce_from_power_basis(std::move(power));
    return r;
}

bool Cyclotomic::divisible_by(long long q) const {
    for (long long c : coeffs_)
        if (c % q != 0) return false;
    return true;
}

Cyclotomic Cyclotomic::divided_by(long long q) const {
    if (q == 0) throw std::domain_error("Cyclotomic: division by zero");
    if (!divisible_by(q)) throw std::domain_error("Cyclotomic: inexact integer division");
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c /= q;
    return r;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> z = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / order_;
        z += static_cast<double>(coeffs_[i]) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
}

} // namespace rdcert::cyclo
