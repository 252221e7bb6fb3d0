#pragma once

// Domain types for the equation family L(m,a): x_1 + ... + x_{m-1} = a * x_m.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rado {

using Int = std::int64_t;

class RadoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Compact assignment whose counts do not add up to m, or carry a negative count.
class StructureError : public RadoError {
public:
    using RadoError::RadoError;
};

/// Text that does not match one of the serialized formats.
class ParseError : public RadoError {
public:
    using RadoError::RadoError;
};

/// A reachability table would exceed the desk-scale cap.
class CapacityError : public RadoError {
public:
    using RadoError::RadoError;
};

/// The pair (m, a). Construction enforces m >= 3 and a >= 1.
class EquationInstance {
public:
    EquationInstance(Int m, Int a);

    Int m() const noexcept { return m_; }
    Int a() const noexcept { return a_; }

    friend bool operator==(const EquationInstance&, const EquationInstance&) = default;

private:
    Int m_;
    Int a_;
};

std::ostream& operator<<(std::ostream& os, const EquationInstance& inst);

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

constexpr Color other(Color c) noexcept { return c == Color::Red ? Color::Blue : Color::Red; }
constexpr char color_char(Color c) noexcept { return c == Color::Red ? 'R' : 'B'; }

/// Total red/blue assignment on [n], 1-indexed.
class Coloring {
public:
    explicit Coloring(std::vector<Color> colors);

    /// Parses "RBBR..."; position i of the string is element i.
    static Coloring parse(std::string_view text);
    /// Everything in `red` is Red, the rest of [n] Blue.
    static Coloring from_red_set(Int n, std::span<const Int> red);

    Int size() const noexcept { return static_cast<Int>(colors_.size()); }
    Color at(Int element) const;
    std::vector<Int> members(Color c) const;
    std::string to_string() const;
    /// Restriction to [n'] for n' <= n.
    Coloring prefix(Int n) const;
    /// Red and Blue exchanged.
    Coloring swapped() const;

    const std::vector<Color>& colors() const noexcept { return colors_; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<Color> colors_;
};

struct Group {
    Int count = 0;
    Int value = 0;
    friend bool operator==(const Group&, const Group&) = default;
};

/// [n_1->d_1; ...; n_k->d_k]: d_1 fills the first n_1 variables, and so on.
/// The last group supplies x_m.
class CompactAssignment {
public:
    CompactAssignment() = default;
    explicit CompactAssignment(std::vector<Group> groups) : groups_(std::move(groups)) {}

    /// Whitespace-insensitive parse of "[6->3; 1->6]".
    static CompactAssignment parse(std::string_view text);

    const std::vector<Group>& groups() const noexcept { return groups_; }
    Int total_count() const;
    std::string to_string() const;

    friend bool operator==(const CompactAssignment&, const CompactAssignment&) = default;

private:
    std::vector<Group> groups_;
};

std::ostream& operator<<(std::ostream& os, const CompactAssignment& asg);

struct MonoWitness {
    Color color = Color::Red;
    CompactAssignment assignment;
    friend bool operator==(const MonoWitness&, const MonoWitness&) = default;
};

/// True iff the expanded assignment satisfies L(m,a). Values may repeat.
/// Throws StructureError when the counts do not sum to m or one is negative,
/// std::invalid_argument on an empty group list or a non-positive value.
bool validate_compact(const EquationInstance& inst, const CompactAssignment& asg);

/// Flat x_1..x_m sequence; zero-count groups contribute nothing.
std::vector<Int> expand_compact(const EquationInstance& inst, const CompactAssignment& asg);

/// Checks that `w` validates and every value it uses lies in [n] with w.color.
bool witness_holds(const EquationInstance& inst, const Coloring& col, const MonoWitness& w);

// Exact comparisons of m against (num/den)*a + 1, done by cross-multiplication.
struct AffineThreshold {
    Int num;
    Int den;
};

inline constexpr AffineThreshold kThreeHalves{3, 2};
inline constexpr AffineThreshold kTwoThirds{2, 3};
inline constexpr AffineThreshold kOneHalf{1, 2};

/// Sign of m - ((num/den)*a + 1).
constexpr std::strong_ordering compare_to_threshold(Int m, Int a, AffineThreshold t) noexcept
{
    return t.den * m <=> t.num * a + t.den;
}

constexpr Int ceil_div(Int num, Int den) noexcept
{
    // den > 0
    return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

constexpr Int floor_mod(Int x, Int mod) noexcept
{
    Int r = x % mod;
    return r < 0 ? r + mod : r;
}

} // namespace rado
