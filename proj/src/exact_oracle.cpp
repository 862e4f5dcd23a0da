#include "kreinccr/exact_oracle.hpp"

#include <cmath>

#include <gmp.h>

namespace kreinccr::exact {

namespace {

// prod_{j=0}^{count-1} (x + step*(j + shift)) for rational x = p/q, built as
// one big numerator over q^count.
Rational rising_product(const Rational& x, long long count, int step, int shift)
{
    const BigInt& p = numerator(x);
    const BigInt& q = denominator(x);
    BigInt num = 1;
    BigInt den = 1;
    for (long long j = 0; j < count; ++j) {
        num *= p + q * (step * (j + shift));
        den *= q;
    }
    return Rational(num, den);
}

double log_abs_int(const BigInt& z)
{
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, z.backend().data());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace

Rational psi_norm_sq(const RepKind& kind, const Rational& level)
{
    const long long offset = kind.offset_of(level);
    if (offset >= 0) {
        // (anchor+1)(anchor+2)...(anchor+offset)
        return rising_product(kind.anchor(), offset, 1, 1);
    }
    // anchor (anchor-1) ... (anchor-|offset|+1)
    return rising_product(kind.anchor(), -offset, -1, 0);
}

int signature(const RepKind& kind, const Rational& level)
{
    return psi_norm_sq(kind, level) > 0 ? 1 : -1;
}

LadderCoefficient ladder_coeff_sq(const RepKind& kind, const Rational& from_level, Direction direction)
{
    const Rational to_level = direction == Direction::Down ? Rational(from_level - 1) : Rational(from_level + 1);
    if (!kind.contains(from_level) || !kind.contains(to_level)) {
        throw DomainError("ladder step " + to_string(from_level) + " -> " + to_string(to_level) +
                          " leaves the " + kind.name() + " lattice");
    }
    const Rational upper = direction == Direction::Down ? from_level : to_level;
    const int sign = direction == Direction::Down ? 1 : (upper < 0 ? -1 : 1);
    return {abs(upper), sign};
}

std::vector<AuditRow> closed_form_audit(const RepKind& kind, int max_n)
{
    if (max_n < 1) throw DomainError("closed_form_audit: max_n must be >= 1");
    std::vector<AuditRow> rows;
    auto push = [&](const Rational& level, const Rational& closed) {
        Rational rec = psi_norm_sq(kind, level);
        const bool match = rec == closed;
        rows.push_back({level, std::move(rec), closed, match});
    };

    switch (kind.tag()) {
    case RepKind::Tag::Fock:
        for (int n = 0; n <= max_n; ++n) push(Rational(n), Rational(factorial(static_cast<unsigned>(n))));
        break;
    case RepKind::Tag::AntiFock:
        for (int k = 1; k <= max_n; ++k) {
            Rational closed(factorial(static_cast<unsigned>(k - 1)));
            if ((k - 1) % 2 != 0) closed = -closed;
            push(Rational(-k), closed);
        }
        break;
    case RepKind::Tag::Lambda: {
        const Rational& l0 = kind.lambda0();
        for (int n = 1; n <= max_n; ++n) {
            Rational closed = 1;
            for (int j = 1; j <= n + 1; ++j) closed *= l0 + j;
            push(l0 + n, closed);
        }
        for (int n = 1; n <= max_n; ++n) {
            Rational closed = 1;
            for (int j = 0; j < n; ++j) closed *= l0 - j;
            push(l0 - n, closed);
        }
        break;
    }
    }
    return rows;
}

double log_abs(const Rational& r)
{
    if (r == 0) throw DomainError("log_abs of zero");
    return log_abs_int(numerator(r)) - log_abs_int(denominator(r));
}

BigInt factorial(unsigned n)
{
    BigInt out;
    mpz_fac_ui(out.backend().data(), n);
    return out;
}

}  // namespace kreinccr::exact
