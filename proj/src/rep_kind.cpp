#include "kreinccr/rep_kind.hpp"

#include <limits>

namespace kreinccr {

RepKind RepKind::fock()
{
    return RepKind(Tag::Fock, Rational(0));
}

RepKind RepKind::anti_fock()
{
    return RepKind(Tag::AntiFock, Rational(-1));
}

RepKind RepKind::lambda(const Rational& lambda0)
{
    if (!(lambda0 > -1 && lambda0 < 0)) {
        throw DomainError("lambda0 must satisfy -1 < lambda0 < 0, got " + to_string(lambda0));
    }
    return RepKind(Tag::Lambda, lambda0);
}

const Rational& RepKind::lambda0() const
{
    if (tag_ != Tag::Lambda) throw DomainError("lambda0 requested for a non-Lambda kind");
    return anchor_;
}

bool RepKind::contains_offset(long long offset) const
{
    switch (tag_) {
    case Tag::Fock: return offset >= 0;
    case Tag::AntiFock: return offset <= 0;
    case Tag::Lambda: return true;
    }
    return false;
}

bool RepKind::contains(const Rational& level) const
{
    const Rational diff = level - anchor_;
    if (denominator(diff) != 1) return false;
    const BigInt& num = numerator(diff);
    if (num > std::numeric_limits<long long>::max() || num < std::numeric_limits<long long>::min()) return false;
    return contains_offset(num.convert_to<long long>());
}

long long RepKind::offset_of(const Rational& level) const
{
    if (!contains(level)) {
        throw DomainError("level " + to_string(level) + " is not on the " + name() + " lattice");
    }
    const Rational diff = level - anchor_;
    return numerator(diff).convert_to<long long>();
}

std::string RepKind::name() const
{
    switch (tag_) {
    case Tag::Fock: return "fock";
    case Tag::AntiFock: return "antifock";
    case Tag::Lambda: return "lambda";
    }
    return "?";
}

RepKind parse_rep_kind(const std::string& name, const Rational& lambda0)
{
    if (name == "fock") return RepKind::fock();
    if (name == "antifock" || name == "anti-fock") return RepKind::anti_fock();
    if (name == "lambda") return RepKind::lambda(lambda0);
    throw DomainError("unknown representation kind '" + name + "'");
}

}  // namespace kreinccr
