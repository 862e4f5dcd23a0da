#ifndef KREINCCR_REP_KIND_HPP
#define KREINCCR_REP_KIND_HPP

#include <string>

#include "kreinccr/types.hpp"

namespace kreinccr {

/*
 * Which irreducible CCR class a representation belongs to.
 *
 *   Fock      N-spectrum {0, 1, 2, ...}, positive metric, anchor psi_0.
 *   AntiFock  N-spectrum {-1, -2, ...}, alternating metric, anchor psi_{-1}.
 *   Lambda    N-spectrum lambda0 + Z with -1 < lambda0 < 0, anchor psi_{lambda0};
 *             positive on levels >= lambda0 and alternating below.
 *
 * Lattice points are addressed either by their exact level or by the integer
 * offset from the anchor (level = anchor + offset).
 */
class RepKind {
public:
    enum class Tag { Fock, AntiFock, Lambda };

    static RepKind fock();
    static RepKind anti_fock();
    // Throws DomainError unless -1 < lambda0 < 0.
    static RepKind lambda(const Rational& lambda0);

    Tag tag() const { return tag_; }
    bool is_fock() const { return tag_ == Tag::Fock; }
    bool is_anti_fock() const { return tag_ == Tag::AntiFock; }
    bool is_lambda() const { return tag_ == Tag::Lambda; }

    // lambda0 for Lambda; 0 for Fock; -1 for AntiFock.
    const Rational& anchor() const { return anchor_; }
    const Rational& lambda0() const;

    bool contains(const Rational& level) const;
    bool contains_offset(long long offset) const;
    // Throws DomainError when the level is off the lattice.
    long long offset_of(const Rational& level) const;
    Rational level_at(long long offset) const { return anchor_ + offset; }

    // "fock", "antifock", "lambda".
    std::string name() const;

    bool operator==(const RepKind&) const = default;

private:
    RepKind(Tag tag, Rational anchor) : tag_(tag), anchor_(std::move(anchor)) {}

    Tag tag_;
    Rational anchor_;
};

// Inverse of RepKind::name; lambda0 is only consulted for "lambda".
RepKind parse_rep_kind(const std::string& name, const Rational& lambda0);

}  // namespace kreinccr

#endif  // KREINCCR_REP_KIND_HPP
