#include "kreinccr/analytic_vectors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "kreinccr/exact_oracle.hpp"
#include "kreinccr/representations.hpp"

namespace kreinccr::analytic {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Contiguous block of lattice offsets [lo, lo + c.size()).
struct Block {
    long long lo = 0;
    std::vector<Complex> c;
};

Block to_block(const LevelCoefficients& psi)
{
    Block b;
    const auto& m = psi.by_offset();
    if (m.empty()) return b;
    b.lo = m.begin()->first;
    b.c.assign(static_cast<std::size_t>(m.rbegin()->first - b.lo + 1), Complex(0.0));
    for (const auto& [off, z] : m) b.c[static_cast<std::size_t>(off - b.lo)] = z;
    return b;
}

void trim(Block& b)
{
    std::size_t first = 0;
    while (first < b.c.size() && b.c[first] == Complex(0.0)) ++first;
    std::size_t last = b.c.size();
    while (last > first && b.c[last - 1] == Complex(0.0)) --last;
    b.c = std::vector<Complex>(b.c.begin() + static_cast<std::ptrdiff_t>(first),
                               b.c.begin() + static_cast<std::ptrdiff_t>(last));
    b.lo += static_cast<long long>(first);
}

// One exact application of q or p on the infinite lattice.
Block step(const RepKind& kind, double anchor, const Block& in, Generator gen)
{
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Block out;
    out.lo = in.lo - 1;
    out.c.assign(in.c.size() + 2, Complex(0.0));
    for (std::size_t i = 0; i < in.c.size(); ++i) {
        const Complex z = in.c[i];
        if (z == Complex(0.0)) continue;
        const long long off = in.lo + static_cast<long long>(i);
        const double level = anchor + static_cast<double>(off);
        // a e_l = sqrt|l| e_{l-1}
        if (kind.contains_offset(off - 1)) {
            const Complex down = z * (std::sqrt(std::fabs(level)) * inv_sqrt2);
            out.c[i] += gen == Generator::Q ? down : down * Complex(0.0, -1.0);
        }
        // a^+ e_l = sign(l+1) sqrt|l+1| e_{l+1}
        if (kind.contains_offset(off + 1)) {
            const double upper = level + 1.0;
            const double mag = std::sqrt(std::fabs(upper)) * inv_sqrt2;
            const Complex up = z * (upper < 0 ? -mag : mag);
            out.c[i + 2] += gen == Generator::Q ? up : up * Complex(0.0, 1.0);
        }
    }
    trim(out);
    return out;
}

double block_norm(const Block& b)
{
    double s = 0.0;
    for (const Complex& z : b.c) s += std::norm(z);
    return std::sqrt(s);
}

double anchor_value(const RepKind& kind)
{
    return to_double(kind.anchor());
}

void require_depth(int k, const char* what)
{
    if (k < 0) throw DomainError(std::string(what) + ": power must be >= 0");
    if (k > kMaxDepth) {
        throw DomainError(std::string(what) + ": power " + std::to_string(k) + " exceeds depth guard " +
                          std::to_string(kMaxDepth));
    }
}

double log_sum_exp(double x, double y)
{
    if (x == kNegInf) return y;
    if (y == kNegInf) return x;
    const double hi = std::max(x, y);
    return hi + std::log1p(std::exp(std::min(x, y) - hi));
}

// log of C n (sqrt2)^k sqrt((m+n+k)!) for one side, with l_of mapping a
// lattice offset to the anti-Fock index l >= 1.
template <typename IndexFn>
double log_side_bound(const LevelCoefficients& side, int k, IndexFn l_of)
{
    if (side.empty()) return kNegInf;
    long long l_min = std::numeric_limits<long long>::max();
    long long l_max = std::numeric_limits<long long>::min();
    double log_c = kNegInf;
    for (const auto& [off, z] : side.by_offset()) {
        const long long l = l_of(off);
        l_min = std::min(l_min, l);
        l_max = std::max(l_max, l);
        // C_l = coefficient on the unnormalized psi_l.
        const double log_coeff =
            std::log(std::abs(z)) - log_psi_to_e_scale(side.kind(), side.kind().level_at(off));
        log_c = std::max(log_c, log_coeff);
    }
    const long long m = l_min;
    const long long n = l_max - l_min;
    return log_c + std::log(static_cast<double>(std::max<long long>(n, 1))) + 0.5 * k * std::log(2.0) +
           0.5 * std::lgamma(static_cast<double>(m + n + k) + 1.0);
}

double max_abs_level(const LevelCoefficients& psi)
{
    double out = 0.0;
    const double anchor = anchor_value(psi.kind());
    for (const auto& [off, z] : psi.by_offset()) out = std::max(out, std::fabs(anchor + static_cast<double>(off)));
    return out;
}

}  // namespace

LevelCoefficients& LevelCoefficients::set(const Rational& level, Complex coefficient)
{
    return set_offset(kind_.offset_of(level), coefficient);
}

LevelCoefficients& LevelCoefficients::set_offset(long long offset, Complex coefficient)
{
    if (!kind_.contains_offset(offset)) {
        throw DomainError("offset " + std::to_string(offset) + " is not on the " + kind_.name() + " lattice");
    }
    if (!std::isfinite(coefficient.real()) || !std::isfinite(coefficient.imag())) {
        throw DomainError("LevelCoefficients: non-finite coefficient");
    }
    if (coefficient == Complex(0.0)) {
        coeffs_.erase(offset);
    } else {
        coeffs_[offset] = coefficient;
    }
    return *this;
}

Complex LevelCoefficients::at(const Rational& level) const
{
    if (!kind_.contains(level)) return 0.0;
    const auto it = coeffs_.find(kind_.offset_of(level));
    return it == coeffs_.end() ? Complex(0.0) : it->second;
}

double LevelCoefficients::norm() const
{
    double s = 0.0;
    for (const auto& [off, z] : coeffs_) s += std::norm(z);
    return std::sqrt(s);
}

LevelCoefficients LevelCoefficients::non_negative_part() const
{
    LevelCoefficients out(kind_);
    for (const auto& [off, z] : coeffs_) {
        if (kind_.anchor() + off >= 0 || (kind_.is_lambda() && off >= 0)) out.coeffs_[off] = z;
    }
    return out;
}

LevelCoefficients LevelCoefficients::negative_part() const
{
    LevelCoefficients out(kind_);
    for (const auto& [off, z] : coeffs_) {
        if (kind_.anchor() + off < 0 && !(kind_.is_lambda() && off >= 0)) out.coeffs_[off] = z;
    }
    return out;
}

LevelCoefficients LevelCoefficients::basis(const RepKind& kind, const Rational& level)
{
    LevelCoefficients out(kind);
    out.set(level, 1.0);
    return out;
}

LevelCoefficients apply_generator(const LevelCoefficients& psi, Generator gen)
{
    LevelCoefficients out(psi.kind());
    if (psi.empty()) return out;
    const Block b = step(psi.kind(), anchor_value(psi.kind()), to_block(psi), gen);
    for (std::size_t i = 0; i < b.c.size(); ++i) {
        if (b.c[i] != Complex(0.0)) out.set_offset(b.lo + static_cast<long long>(i), b.c[i]);
    }
    return out;
}

std::vector<double> log_power_norms(const LevelCoefficients& psi, int max_k, Generator gen)
{
    require_depth(max_k, "log_power_norms");
    std::vector<double> out(static_cast<std::size_t>(max_k) + 1, kNegInf);
    Block b = to_block(psi);
    const double anchor = anchor_value(psi.kind());
    double log_scale = 0.0;
    for (int k = 0; k <= max_k; ++k) {
        if (k > 0) b = step(psi.kind(), anchor, b, gen);
        const double nrm = block_norm(b);
        if (nrm == 0.0) break;
        out[static_cast<std::size_t>(k)] = log_scale + std::log(nrm);
        // Keep the working coefficients O(1); the scale is carried in log form.
        for (Complex& z : b.c) z /= nrm;
        log_scale += std::log(nrm);
    }
    return out;
}

double qk_norm(const LevelCoefficients& psi, int k, Generator gen)
{
    require_depth(k, "qk_norm");
    const double log_norm = log_power_norms(psi, k, gen).back();
    const double value = std::exp(log_norm);
    if (std::isinf(value)) throw std::overflow_error("qk_norm: norm exceeds double range");
    return value;
}

BoundCheck bound_check(const LevelCoefficients& psi, int k, Generator gen)
{
    require_depth(k, "bound_check");
    if (psi.empty()) throw DomainError("bound_check: empty vector");
    const double log_lhs = log_power_norms(psi, k, gen).back();

    double log_rhs = kNegInf;
    switch (psi.kind().tag()) {
    case RepKind::Tag::AntiFock:
        // level -l = -1 + offset
        log_rhs = log_side_bound(psi, k, [](long long off) { return 1 - off; });
        break;
    case RepKind::Tag::Fock:
        log_rhs = log_side_bound(psi, k, [](long long off) { return off + 1; });
        break;
    case RepKind::Tag::Lambda:
        log_rhs = log_sum_exp(log_side_bound(psi.non_negative_part(), k, [](long long off) { return off + 1; }),
                              log_side_bound(psi.negative_part(), k, [](long long off) { return -off; }));
        break;
    }
    return {std::exp(log_lhs), std::exp(log_rhs), log_lhs <= log_rhs};
}

std::vector<double> series_terms(const LevelCoefficients& psi, double t, int K, Generator gen)
{
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("series_terms: t must be finite and >= 0");
    require_depth(K, "series_terms");
    const std::vector<double> log_norms = log_power_norms(psi, K, gen);
    std::vector<double> terms(log_norms.size(), 0.0);
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (log_norms[k] == kNegInf) continue;
        if (t == 0.0) {
            terms[k] = k == 0 ? std::exp(log_norms[0]) : 0.0;
            continue;
        }
        const double kd = static_cast<double>(k);
        terms[k] = std::exp(kd * std::log(t) - std::lgamma(kd + 1.0) + log_norms[k]);
    }
    return terms;
}

std::vector<double> series_partial_sums(const LevelCoefficients& psi, double t, int K, Generator gen)
{
    std::vector<double> sums = series_terms(psi, t, K, gen);
    for (std::size_t k = 1; k < sums.size(); ++k) sums[k] += sums[k - 1];
    return sums;
}

Certificate convergence_certificate(const LevelCoefficients& psi, double t, double epsilon, Generator gen)
{
    if (!(epsilon > 0.0)) throw DomainError("convergence_certificate: epsilon must be > 0");
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("convergence_certificate: t must be finite and >= 0");
    if (psi.empty() || t == 0.0) return {0, 0.0};

    constexpr int kWindow = 16;
    const double l0 = max_abs_level(psi);
    auto ratio_bound = [&](int k) { return t * std::sqrt(2.0 * (l0 + k + 1.0)) / (k + 1.0); };

    for (int depth = 64;; depth = std::min(2 * depth, kMaxDepth)) {
        const std::vector<double> terms = series_terms(psi, t, depth, gen);
        for (int k0 = 0; k0 + 1 + kWindow <= depth; ++k0) {
            if (ratio_bound(k0) > 0.5) continue;
            const double tail = 2.0 * terms[static_cast<std::size_t>(k0) + 1];
            if (tail > epsilon) continue;
            for (int k = k0; k < k0 + kWindow; ++k) {
                const double prev = terms[static_cast<std::size_t>(k)];
                const double next = terms[static_cast<std::size_t>(k) + 1];
                if (prev > 0.0 && next > ratio_bound(k) * prev * (1.0 + 1e-12)) {
                    throw InconclusiveError("convergence_certificate: computed term ratio exceeds its a priori bound");
                }
            }
            return {k0, tail};
        }
        if (depth == kMaxDepth) break;
    }
    throw InconclusiveError("convergence_certificate: no certificate within depth guard");
}

}  // namespace kreinccr::analytic
