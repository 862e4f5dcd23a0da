#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "kreinccr/analytic_vectors.hpp"
#include "kreinccr/weyl_engine.hpp"

using namespace kreinccr;
using namespace kreinccr::analytic;

namespace {

const Rational kHalf(-1, 2);
const double kR = 1.0 / std::sqrt(2.0);

std::vector<RepKind> all_kinds() { return {RepKind::fock(), RepKind::anti_fock(), RepKind::lambda(kHalf)}; }

// Window centred so that psi and k applications of the generator stay inside
// with a margin, plus the matching dense vector.
struct DenseWindow {
    Representation rep;
    ComplexVector v;
};

DenseWindow dense_window(const LevelCoefficients& psi, int reach)
{
    const RepKind& kind = psi.kind();
    const long long lo = psi.by_offset().begin()->first - reach - 4;
    const long long hi = psi.by_offset().rbegin()->first + reach + 4;
    Representation rep = [&] {
        if (kind.is_fock()) return build(kind, static_cast<std::size_t>(hi + 1));
        if (kind.is_anti_fock()) return build(kind, static_cast<std::size_t>(1 - lo));
        const long long below = std::max(0LL, -lo);
        return build(kind, static_cast<std::size_t>(below + std::max(hi, 0LL) + 1), static_cast<std::size_t>(below));
    }();
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(rep.dim()));
    for (const auto& [off, z] : psi.by_offset()) v[rep.index_of(kind.level_at(off))] = z;
    return {std::move(rep), std::move(v)};
}

LevelCoefficients random_sparse(const RepKind& kind, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    LevelCoefficients psi(kind);
    const long long start = kind.is_fock() ? static_cast<long long>(rng() % 10)
                            : kind.is_anti_fock() ? -static_cast<long long>(rng() % 10)
                                                  : static_cast<long long>(rng() % 12) - 6;
    const int len = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < len; ++j) {
        const long long off = kind.is_anti_fock() ? start - j : start + j;
        psi.set_offset(off, Complex(u(rng), u(rng)));
    }
    return psi;
}

LevelCoefficients span(const RepKind& kind, int from, int to)
{
    LevelCoefficients psi(kind);
    for (int l = std::min(from, to); l <= std::max(from, to); ++l) psi.set(l, 1.0);
    return psi;
}

}  // namespace

TEST(LevelCoefficientsTest, Basics)
{
    LevelCoefficients psi(RepKind::anti_fock());
    EXPECT_THROW(psi.set(0, 1.0), DomainError);
    EXPECT_THROW(psi.set(Rational(-3, 2), 1.0), DomainError);
    EXPECT_THROW(psi.set(-2, Complex(std::nan(""), 0.0)), DomainError);
    psi.set(-2, Complex(3.0, 4.0));
    EXPECT_EQ(psi.at(-2), Complex(3.0, 4.0));
    EXPECT_EQ(psi.at(-5), Complex(0.0));
    EXPECT_DOUBLE_EQ(psi.norm(), 5.0);
    psi.set(-2, 0.0);
    EXPECT_TRUE(psi.empty());
}

TEST(LevelCoefficientsTest, LambdaSplit)
{
    LevelCoefficients psi(RepKind::lambda(kHalf));
    psi.set(kHalf - 2, 1.0).set(kHalf, 2.0).set(kHalf + 1, 3.0);
    const auto pos = psi.non_negative_part();
    const auto neg = psi.negative_part();
    EXPECT_EQ(pos.support_size(), 2u);
    EXPECT_EQ(pos.at(kHalf), Complex(2.0));
    EXPECT_EQ(neg.support_size(), 1u);
    EXPECT_EQ(neg.at(kHalf - 2), Complex(1.0));
}

TEST(ApplyQ, HandValues)
{
    auto q1 = apply_q(LevelCoefficients::basis(RepKind::anti_fock(), -1));
    EXPECT_EQ(q1.support_size(), 1u);
    EXPECT_NEAR(std::abs(q1.at(-2) - kR), 0.0, 1e-16);

    auto q0 = apply_q(LevelCoefficients::basis(RepKind::fock(), 0));
    EXPECT_EQ(q0.support_size(), 1u);
    EXPECT_NEAR(std::abs(q0.at(1) - kR), 0.0, 1e-16);

    auto q2 = apply_q(LevelCoefficients::basis(RepKind::anti_fock(), -2));
    EXPECT_EQ(q2.support_size(), 2u);
    EXPECT_NEAR(std::abs(q2.at(-3) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(q2.at(-1) + kR), 0.0, 1e-16);

    auto p1 = apply_p(LevelCoefficients::basis(RepKind::anti_fock(), -1));
    EXPECT_NEAR(std::abs(p1.at(-2) - Complex(0.0, -kR)), 0.0, 1e-16);
}

TEST(ApplyQ, MatchesDenseMatrix)
{
    std::mt19937_64 rng(17);
    for (const auto& kind : all_kinds()) {
        for (int trial = 0; trial < 100; ++trial) {
            const LevelCoefficients psi = random_sparse(kind, rng);
            const DenseWindow w = dense_window(psi, 1);
            const auto pq = weyl::build_pq(w.rep);
            for (Generator gen : {Generator::Q, Generator::P}) {
                const ComplexVector dense = (gen == Generator::Q ? pq.q : pq.p) * w.v;
                const LevelCoefficients sparse = apply_generator(psi, gen);
                for (std::size_t i = 0; i < w.rep.dim(); ++i) {
                    EXPECT_LE(std::abs(sparse.at(w.rep.levels[i]) - dense[i]), 1e-13);
                }
            }
        }
    }
}

TEST(ApplyQ, KreinSymmetric)
{
    std::mt19937_64 rng(19);
    for (const auto& kind : all_kinds()) {
        for (int trial = 0; trial < 30; ++trial) {
            LevelCoefficients x = random_sparse(kind, rng), y = random_sparse(kind, rng);
            // common window for both vectors
            LevelCoefficients both(kind);
            for (const auto& [off, z] : x.by_offset()) both.set_offset(off, 1.0);
            for (const auto& [off, z] : y.by_offset()) both.set_offset(off, 1.0);
            const DenseWindow w = dense_window(both, 2);
            auto to_dense = [&](const LevelCoefficients& c) {
                ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(w.rep.dim()));
                for (const auto& [off, z] : c.by_offset()) v[w.rep.index_of(kind.level_at(off))] = z;
                return v;
            };
            const Complex lhs = indefinite_inner(to_dense(apply_q(x)), to_dense(y), w.rep.ks);
            const Complex rhs = indefinite_inner(to_dense(x), to_dense(apply_q(y)), w.rep.ks);
            EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST(QkNorm, HandValuesAndDenseOracle)
{
    const auto e1 = LevelCoefficients::basis(RepKind::anti_fock(), -1);
    EXPECT_DOUBLE_EQ(qk_norm(e1, 0), 1.0);
    EXPECT_NEAR(qk_norm(e1, 1), kR, 1e-15);

    std::mt19937_64 rng(23);
    for (const auto& kind : all_kinds()) {
        for (int trial = 0; trial < 10; ++trial) {
            const LevelCoefficients psi = trial == 0 && kind.is_anti_fock() ? e1 : random_sparse(kind, rng);
            const DenseWindow w = dense_window(psi, 10);
            const ComplexMatrix q = weyl::build_pq(w.rep).q;
            ComplexVector v = w.v;
            for (int k = 0; k <= 10; ++k) {
                const double expected = v.norm();
                EXPECT_LE(std::abs(qk_norm(psi, k) - expected), 1e-13 * std::max(1.0, expected)) << kind.name() << k;
                v = q * v;
            }
        }
    }
}

TEST(QkNorm, DepthGuard)
{
    const auto e1 = LevelCoefficients::basis(RepKind::anti_fock(), -1);
    EXPECT_THROW(qk_norm(e1, kMaxDepth + 1), DomainError);
    EXPECT_THROW(qk_norm(e1, -1), DomainError);
    EXPECT_THROW(qk_norm(e1, 1000), std::overflow_error);
    const auto logs = log_power_norms(e1, 1000);
    EXPECT_TRUE(std::isfinite(logs.back()));
}

TEST(QkNorm, LambdaSplitTriangle)
{
    std::mt19937_64 rng(29);
    const RepKind kind = RepKind::lambda(kHalf);
    for (int trial = 0; trial < 30; ++trial) {
        LevelCoefficients psi = random_sparse(kind, rng);
        psi.set(kHalf - 1, 0.5).set(kHalf + 1, -0.25);
        for (int k = 0; k <= 20; ++k) {
            EXPECT_LE(qk_norm(psi, k),
                      (qk_norm(psi.non_negative_part(), k) + qk_norm(psi.negative_part(), k)) * (1 + 1e-14));
        }
    }
}

TEST(BoundCheck, HandValue)
{
    const auto e1 = LevelCoefficients::basis(RepKind::anti_fock(), -1);
    const auto b = bound_check(e1, 1);
    EXPECT_NEAR(b.lhs, kR, 1e-15);
    EXPECT_NEAR(b.rhs, 2.0, 1e-14);
    EXPECT_TRUE(b.holds);
    const auto b0 = bound_check(e1, 0);
    EXPECT_TRUE(b0.holds);
    EXPECT_NEAR(b0.lhs, 1.0, 1e-15);
}

TEST(BoundCheck, HoldsUpTo40)
{
    std::vector<LevelCoefficients> cases{LevelCoefficients::basis(RepKind::anti_fock(), -1),
                                         span(RepKind::anti_fock(), -3, -5), span(RepKind::anti_fock(), -1, -9),
                                         span(RepKind::fock(), 0, 4), LevelCoefficients::basis(RepKind::fock(), 7)};
    LevelCoefficients lam(RepKind::lambda(kHalf));
    lam.set(kHalf - 2, 1.0).set(kHalf, -0.5).set(kHalf + 3, Complex(0.0, 2.0));
    cases.push_back(lam);
    for (const auto& psi : cases) {
        for (int k = 0; k <= 40; ++k) {
            const auto b = bound_check(psi, k);
            EXPECT_TRUE(b.holds) << psi.kind().name() << " k=" << k << " " << b.lhs << " > " << b.rhs;
            EXPECT_NEAR(b.lhs, qk_norm(psi, k), 1e-12 * b.lhs);
        }
    }
}

TEST(Series, SmallTAndMonotone)
{
    const auto psi = span(RepKind::anti_fock(), -1, -3);
    for (double s : series_partial_sums(psi, 0.0, 10)) EXPECT_DOUBLE_EQ(s, psi.norm());
    const auto sums = series_partial_sums(psi, 1.0, 60);
    for (std::size_t k = 1; k < sums.size(); ++k) EXPECT_GE(sums[k], sums[k - 1]);
    const auto terms = series_terms(psi, 1.0, 60);
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const double expected = std::pow(1.0, k) / std::tgamma(k + 1.0) * qk_norm(psi, static_cast<int>(k));
        EXPECT_LE(std::abs(terms[k] - expected), 1e-12 * expected);
    }
    // increments eventually decay faster than geometrically
    EXPECT_LT(terms[60] / terms[59], terms[30] / terms[29]);
    EXPECT_LT(terms[60] / terms[59], 0.5);
}

TEST(Certificate, SmallT)
{
    const auto e1 = LevelCoefficients::basis(RepKind::anti_fock(), -1);
    const auto c = convergence_certificate(e1, 0.1, 1e-10);
    EXPECT_LE(c.K0, 10);
    EXPECT_LT(c.tail_bound, 1e-10);
}

TEST(Certificate, SoundAgainstLongSums)
{
    for (const auto& psi : {LevelCoefficients::basis(RepKind::anti_fock(), -1), span(RepKind::anti_fock(), -1, -5),
                            span(RepKind::fock(), 2, 6)}) {
        for (double t : {0.5, 1.0, 3.0}) {
            const auto c = convergence_certificate(psi, t, 1e-10);
            const auto terms = series_terms(psi, t, 600);
            double tail = 0.0;
            for (std::size_t k = static_cast<std::size_t>(c.K0) + 1; k < terms.size(); ++k) tail += terms[k];
            EXPECT_LE(tail, c.tail_bound);
            EXPECT_LE(c.tail_bound, 1e-10);
        }
    }
}

TEST(Certificate, MonotoneInT)
{
    const auto psi = span(RepKind::anti_fock(), -1, -5);
    int prev = 0;
    for (double t : {0.1, 0.5, 1.0, 2.0, 4.0, 8.0}) {
        const int k0 = convergence_certificate(psi, t, 1e-10).K0;
        EXPECT_GE(k0, prev) << t;
        prev = k0;
    }
}

TEST(Certificate, InconclusiveBeyondDepth)
{
    const auto e1 = LevelCoefficients::basis(RepKind::anti_fock(), -1);
    EXPECT_THROW(convergence_certificate(e1, 1e6, 1e-10), InconclusiveError);
    EXPECT_THROW(convergence_certificate(e1, 1.0, 0.0), DomainError);
}
