#ifndef KREINCCR_ANALYTIC_VECTORS_HPP
#define KREINCCR_ANALYTIC_VECTORS_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "kreinccr/rep_kind.hpp"
#include "kreinccr/types.hpp"

namespace kreinccr::analytic {

// Powers q^k (or p^k) are only formed for k up to this depth.
inline constexpr int kMaxDepth = 4096;

/*
 * Finitely supported vector on the infinite level lattice, in the normalized
 * e-basis. Keys are offsets from the kind's anchor, so no truncation window
 * is ever involved.
 */
class LevelCoefficients {
public:
    explicit LevelCoefficients(RepKind kind) : kind_(std::move(kind)) {}

    // Throws DomainError for off-lattice levels or non-finite coefficients.
    LevelCoefficients& set(const Rational& level, Complex coefficient);
    LevelCoefficients& set_offset(long long offset, Complex coefficient);

    Complex at(const Rational& level) const;
    const RepKind& kind() const { return kind_; }
    const std::map<long long, Complex>& by_offset() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }

    double norm() const;

    // Levels >= lambda0 and levels < lambda0 (Lambda only; Fock/AntiFock
    // put everything on one side).
    LevelCoefficients non_negative_part() const;
    LevelCoefficients negative_part() const;

    static LevelCoefficients basis(const RepKind& kind, const Rational& level);

private:
    RepKind kind_;
    std::map<long long, Complex> coeffs_;
};

// Exact lattice action of q (or p). Zero coefficients are dropped.
LevelCoefficients apply_generator(const LevelCoefficients& psi, Generator gen);
inline LevelCoefficients apply_q(const LevelCoefficients& psi) { return apply_generator(psi, Generator::Q); }
inline LevelCoefficients apply_p(const LevelCoefficients& psi) { return apply_generator(psi, Generator::P); }

// log ||G^k psi|| for k = 0..max_k, renormalizing as it goes so that norms
// far beyond double range stay representable. -inf marks a zero vector.
std::vector<double> log_power_norms(const LevelCoefficients& psi, int max_k, Generator gen = Generator::Q);

// ||G^k psi||. Throws DomainError past kMaxDepth, std::overflow_error if the
// value leaves double range.
double qk_norm(const LevelCoefficients& psi, int k, Generator gen = Generator::Q);

struct BoundCheck {
    double lhs;
    double rhs;
    bool holds;
};

/*
 * ||q^k psi|| against C n (sqrt2)^k sqrt((m+n+k)!), where psi is read as
 * sum_l C_l psi_{-l} over l = m..m+n with psi_{-l} unnormalized and n is
 * replaced by max(n, 1). Fock level j is read as l = j+1. Lambda vectors are
 * split at lambda0 and the two sides bounded separately (levels l0+j and
 * l0-j-1 both read as l = j+1); rhs is the sum of both sides.
 */
BoundCheck bound_check(const LevelCoefficients& psi, int k, Generator gen = Generator::Q);

// S_0..S_K, S_K = sum_{k<=K} t^k / k! ||q^k psi||.
std::vector<double> series_partial_sums(const LevelCoefficients& psi, double t, int K,
                                        Generator gen = Generator::Q);

// t^k / k! ||q^k psi|| for k = 0..K, evaluated in log space.
std::vector<double> series_terms(const LevelCoefficients& psi, double t, int K, Generator gen = Generator::Q);

struct Certificate {
    int K0;
    double tail_bound;  // 2 term_{K0+1} >= sum_{k > K0} term_k
};

/*
 * Finds the smallest K0 with 2 term_{K0+1} <= epsilon such that every later
 * term ratio is provably <= 1/2. The proof uses ||G phi|| <= sqrt(2(L+1)) ||phi||
 * for phi supported on |level| <= L, and L grows by one per power, giving
 * term_{k+1}/term_k <= t sqrt(2(L0+k+1)) / (k+1), a bound that decreases in k.
 * The computed ratios over a window after K0 are checked against it as well.
 * Throws InconclusiveError if no K0 <= kMaxDepth qualifies.
 */
Certificate convergence_certificate(const LevelCoefficients& psi, double t, double epsilon,
                                    Generator gen = Generator::Q);

}  // namespace kreinccr::analytic

#endif  // KREINCCR_ANALYTIC_VECTORS_HPP
