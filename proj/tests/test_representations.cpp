#include <cmath>

#include <gtest/gtest.h>

#include "kreinccr/exact_oracle.hpp"
#include "kreinccr/representations.hpp"

using namespace kreinccr;

namespace {

const Rational kHalf(-1, 2);

std::vector<RepKind> all_kinds()
{
    return {RepKind::fock(), RepKind::anti_fock(), RepKind::lambda(kHalf), RepKind::lambda(Rational(-1, 3))};
}

std::size_t window_for(const RepKind& kind, std::size_t dim) { return kind.is_lambda() ? dim / 2 : 0; }

double interior_max(const ComplexMatrix& m, const std::vector<std::size_t>& idx)
{
    double worst = 0.0;
    for (auto i : idx)
        for (auto j : idx) worst = std::max(worst, std::abs(m(i, j)));
    return worst;
}

}  // namespace

TEST(Build, FockDim3)
{
    const auto rep = build(RepKind::fock(), 3);
    ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
    expected(0, 1) = 1.0;
    expected(1, 2) = std::sqrt(2.0);
    EXPECT_EQ(rep.a, expected);
    EXPECT_EQ(rep.a_dag, expected.transpose());
}

TEST(Build, AntiFockLowestRungs)
{
    const auto rep = build(RepKind::anti_fock(), 4);
    const auto i1 = rep.index_of(-1), i2 = rep.index_of(-2);
    // a e_{-1} = e_{-2}
    EXPECT_EQ(rep.a.col(i1), ComplexVector::Unit(4, i2));
    // a^+ e_{-2} = -e_{-1}
    EXPECT_EQ(rep.a_dag.col(i2), -ComplexVector::Unit(4, i1));
    // a^+ e_{-1} = 0
    EXPECT_TRUE(rep.a_dag.col(i1).isZero(0.0));
}

TEST(Build, LambdaSeam)
{
    const auto rep = build(RepKind::lambda(kHalf), 3, 1);
    ASSERT_EQ(rep.levels, (std::vector<Rational>{kHalf - 1, kHalf, kHalf + 1}));
    const double r = std::sqrt(0.5);
    EXPECT_NEAR(rep.a_dag(1, 0).real(), -r, 1e-16);
    EXPECT_NEAR(rep.a_dag(2, 1).real(), r, 1e-16);
    EXPECT_NEAR(rep.a(0, 1).real(), r, 1e-16);
    EXPECT_NEAR(rep.a(1, 2).real(), r, 1e-16);
}

TEST(Build, Errors)
{
    EXPECT_THROW(build(RepKind::fock(), 1), DomainError);
    EXPECT_THROW(build(RepKind::lambda(kHalf), 4, 4), DomainError);
    EXPECT_THROW(RepKind::lambda(Rational(0)), DomainError);
    EXPECT_THROW(RepKind::lambda(Rational(-1)), DomainError);
    EXPECT_THROW(RepKind::lambda(Rational(1, 2)), DomainError);
    EXPECT_NO_THROW(build(RepKind::fock(), 4, 99));
}

TEST(Build, WindowsAndSignatures)
{
    for (const auto& kind : all_kinds()) {
        const std::size_t w = window_for(kind, 20);
        const auto rep = build(kind, 20, w);
        for (std::size_t i = 0; i < rep.dim(); ++i) {
            EXPECT_EQ(rep.ks[i], exact::signature(kind, rep.levels[i]));
            const Complex self = indefinite_inner(ComplexVector::Unit(20, i), ComplexVector::Unit(20, i), rep.ks);
            EXPECT_EQ(self, Complex(rep.ks[i]));
            EXPECT_EQ(rep.index_of(rep.levels[i]), i);
        }
        if (kind.is_fock()) EXPECT_EQ(rep.levels.front(), 0);
        if (kind.is_anti_fock()) EXPECT_EQ(rep.levels.front(), -1);
        if (kind.is_lambda()) EXPECT_EQ(rep.levels[w], kind.lambda0());
    }
    const auto anti = build(RepKind::anti_fock(), 6);
    EXPECT_EQ(std::vector<int>(anti.ks.signature().begin(), anti.ks.signature().end()),
              (std::vector<int>{1, -1, 1, -1, 1, -1}));
}

TEST(Build, KreinAdjointBitExact)
{
    for (const auto& kind : all_kinds()) {
        for (std::size_t dim : {2u, 8u, 33u, 128u}) {
            const auto rep = build(kind, dim, window_for(kind, dim));
            EXPECT_EQ(rep.a_dag, krein_adjoint(rep.a, rep.ks));
            EXPECT_EQ(check_adjoint_relations(rep).krein_adjoint_defect, 0.0);
        }
    }
}

TEST(Build, EntriesMatchExactLadder)
{
    for (const auto& kind : all_kinds()) {
        const auto rep = build(kind, 40, window_for(kind, 40));
        for (std::size_t i = 0; i + 1 < rep.dim(); ++i) {
            const bool ascending = rep.levels[i] < rep.levels[i + 1];
            const std::size_t lo = ascending ? i : i + 1, hi = ascending ? i + 1 : i;
            const auto c = exact::ladder_coeff_sq(kind, rep.levels[lo], exact::Direction::Up);
            const long double mag = std::sqrt(static_cast<long double>(to_double(c.magnitude_sq)));
            EXPECT_LE(std::abs(rep.a(lo, hi).real() - mag), 1e-15L * mag);
            EXPECT_LE(std::abs(rep.a_dag(hi, lo).real() - c.sign * mag), 1e-15L * mag);
        }
    }
}

TEST(LadderMagnitude, LargeLevels)
{
    for (long long l : {1LL, 17LL, 999LL, 123457LL, 1000000LL}) {
        const long double expected = std::sqrt(static_cast<long double>(l));
        EXPECT_LE(std::abs(ladder_magnitude(Rational(l)) - expected), 1e-13L * expected);
        EXPECT_LE(std::abs(ladder_magnitude(Rational(-l)) - expected), 1e-13L * expected);
        const Rational frac = Rational(l) - Rational(1, 2);
        const long double ef = std::sqrt(static_cast<long double>(l) - 0.5L);
        EXPECT_LE(std::abs(ladder_magnitude(frac) - ef), 1e-13L * ef);
    }
}

TEST(LevelSpectrum, Examples)
{
    const auto fock = level_spectrum(build(RepKind::fock(), 4));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(fock[i], static_cast<double>(i), 1e-15);
    const auto anti = level_spectrum(build(RepKind::anti_fock(), 3));
    ASSERT_EQ(anti.size(), 3u);
    EXPECT_NEAR(anti[0], -1, 1e-15);
    EXPECT_NEAR(anti[1], -2, 1e-15);
    EXPECT_NEAR(anti[2], -3, 1e-15);
    const auto lam = level_spectrum(build(RepKind::lambda(kHalf), 3, 1));
    EXPECT_NEAR(lam[0], -1.5, 1e-15);
    EXPECT_NEAR(lam[1], -0.5, 1e-15);
    EXPECT_NEAR(lam[2], 0.5, 1e-15);
}

TEST(LevelSpectrum, MatchesLatticeAllDims)
{
    for (const auto& kind : all_kinds()) {
        for (std::size_t dim : {8u, 32u, 128u, 256u}) {
            const auto rep = build(kind, dim, window_for(kind, dim));
            const auto spec = level_spectrum(rep);
            for (std::size_t i = 0; i < dim; ++i) {
                const double l = to_double(rep.levels[i]);
                EXPECT_LE(std::abs(spec[i] - l), 1e-12 * std::max(1.0, std::abs(l))) << kind.name() << " " << i;
            }
        }
    }
}

TEST(CommutatorDefect, FockTopOnly)
{
    const auto rep = build(RepKind::fock(), 3);
    const ComplexMatrix d = commutator_defect(rep);
    for (Eigen::Index i = 0; i < 3; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) {
            if (i == 2 && j == 2) {
                EXPECT_NEAR(d(i, j).real(), -3.0, 1e-15);
            } else {
                EXPECT_LE(std::abs(d(i, j)), 1e-15) << i << "," << j;
            }
        }
    EXPECT_EQ(boundary_indices(rep), (std::vector<std::size_t>{2}));
}

TEST(CommutatorDefect, BoundaryIndices)
{
    EXPECT_EQ(boundary_indices(build(RepKind::anti_fock(), 5)), (std::vector<std::size_t>{4}));
    EXPECT_EQ(boundary_indices(build(RepKind::lambda(kHalf), 5, 2)), (std::vector<std::size_t>{0, 4}));
    EXPECT_EQ(interior_indices(build(RepKind::lambda(kHalf), 5, 2)), (std::vector<std::size_t>{1, 2, 3}));
}

TEST(CommutatorDefect, InteriorVanishes)
{
    for (const auto& kind : all_kinds()) {
        for (std::size_t dim : {8u, 64u, 256u}) {
            const auto rep = build(kind, dim, window_for(kind, dim));
            EXPECT_LE(interior_max(commutator_defect(rep), interior_indices(rep)), 1e-12) << kind.name() << dim;
        }
    }
}

TEST(AdjointRelations, AntiFock)
{
    const auto r = check_adjoint_relations(build(RepKind::anti_fock(), 32));
    EXPECT_LE(r.anticommutator_defect, 1e-13);
    EXPECT_LE(r.anticommutator_dag_defect, 1e-13);
    EXPECT_LE(r.conjugation_defect, 1e-13);
}

TEST(AdjointRelations, FockDoesNotAnticommute)
{
    const auto rep = build(RepKind::fock(), 8);
    const auto r = check_adjoint_relations(rep);
    EXPECT_NEAR(r.anticommutator_defect, 2.0 * spectral_norm(rep.a), 1e-13);
}

TEST(AdjointRelations, LambdaNegativeBlock)
{
    const auto rep = build(RepKind::lambda(kHalf), 24, 12);
    const auto neg = negative_level_indices(rep);
    // twelve levels below lambda0, plus lambda0 itself
    ASSERT_EQ(neg.size(), 13u);
    const auto r = check_adjoint_relations(rep, neg);
    EXPECT_LE(r.anticommutator_defect, 1e-13);
    EXPECT_LE(r.anticommutator_dag_defect, 1e-13);
    EXPECT_LE(r.conjugation_defect, 1e-13);
    // entrywise: a couples opposite signatures on the negative side
    for (auto i : neg)
        for (auto j : neg)
            if (rep.a(i, j) != 0.0) EXPECT_EQ(rep.ks[i], -rep.ks[j]);
    EXPECT_GT(check_adjoint_relations(rep).anticommutator_defect, 0.1);
}

TEST(AntiFockMap, EqualsFockBuild)
{
    for (std::size_t dim : {2u, 4u, 16u, 64u}) {
        const auto anti = build(RepKind::anti_fock(), dim);
        const auto mapped = antifock_to_fock(anti);
        const auto fock = build(RepKind::fock(), dim);
        EXPECT_TRUE(mapped.kind.is_fock());
        EXPECT_EQ(mapped.levels, fock.levels);
        EXPECT_EQ(mapped.a, fock.a);
        EXPECT_EQ(mapped.a_dag, fock.a_dag);
        EXPECT_EQ(mapped.ks, fock.ks);
        const auto back = fock_to_antifock(mapped);
        EXPECT_EQ(back.a, anti.a);
        EXPECT_EQ(back.a_dag, anti.a_dag);
        EXPECT_EQ(back.levels, anti.levels);
        EXPECT_EQ(back.ks, anti.ks);
    }
    EXPECT_THROW(antifock_to_fock(build(RepKind::fock(), 4)), DomainError);
}

TEST(AntiFockMap, Dim16SqrtEntries)
{
    const auto mapped = antifock_to_fock(build(RepKind::anti_fock(), 16));
    for (Eigen::Index i = 0; i < 16; ++i)
        for (Eigen::Index j = 0; j < 16; ++j) {
            const double expected = j == i + 1 ? std::sqrt(static_cast<double>(j)) : 0.0;
            EXPECT_EQ(mapped.a(i, j), Complex(expected));
        }
}

TEST(AntiFockMap, PairCommutators)
{
    for (std::size_t dim : {2u, 16u, 64u}) {
        const auto rep = build(RepKind::anti_fock(), dim);
        const auto pair = anti_fock_pair(rep);
        EXPECT_EQ(pair.b_krein_adj, rep.a);
        EXPECT_EQ(pair.b_star, (-rep.a).eval());
        const ComplexMatrix krein_comm = pair.b * pair.b_krein_adj - pair.b_krein_adj * pair.b;
        const ComplexMatrix star_comm = pair.b * pair.b_star - pair.b_star * pair.b;
        // b = a^+ lowers nothing at level -1 and raises into it; the cut is at the bottom
        for (std::size_t i = 0; i + 1 < dim; ++i) {
            EXPECT_NEAR(std::abs(krein_comm(i, i) + 1.0), 0.0, 1e-12);
            EXPECT_NEAR(std::abs(star_comm(i, i) - 1.0), 0.0, 1e-12);
        }
        const ComplexMatrix off_k = krein_comm - ComplexMatrix(krein_comm.diagonal().asDiagonal());
        EXPECT_EQ(off_k.norm(), 0.0);
    }
}

TEST(PsiToE, Values)
{
    EXPECT_DOUBLE_EQ(psi_to_e_scale(RepKind::anti_fock(), -3), std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(psi_to_e_scale(RepKind::anti_fock(), -1), 1.0);
    EXPECT_DOUBLE_EQ(psi_to_e_scale(RepKind::lambda(kHalf), kHalf - 1), std::sqrt(0.5));
    EXPECT_THROW(psi_to_e_scale(RepKind::anti_fock(), 0), DomainError);
    EXPECT_THROW(psi_to_e_scale(RepKind::fock(), 400), std::overflow_error);
    EXPECT_NEAR(log_psi_to_e_scale(RepKind::fock(), 400), 0.5 * std::lgamma(401.0), 1e-12 * std::lgamma(401.0));
}

TEST(PsiToE, MatchesOracleTo1e13)
{
    for (const auto& kind : all_kinds()) {
        for (long long off = -150; off <= 150; ++off) {
            if (!kind.contains_offset(off)) continue;
            const Rational l = kind.level_at(off);
            const double exact_log = 0.5 * exact::log_abs(exact::psi_norm_sq(kind, l));
            EXPECT_LE(std::abs(std::log(psi_to_e_scale(kind, l)) - exact_log), 1e-13 * std::max(1.0, exact_log));
        }
    }
}
