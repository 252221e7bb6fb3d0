#include "rado/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>

namespace rado {

EquationInstance::EquationInstance(Int m, Int a) : m_(m), a_(a)
{
    if (m < 3)
        throw std::invalid_argument("L(m,a) needs m >= 3, got m=" + std::to_string(m));
    if (a < 1)
        throw std::invalid_argument("L(m,a) needs a >= 1, got a=" + std::to_string(a));
}

std::ostream& operator<<(std::ostream& os, const EquationInstance& inst)
{
    return os << "L(" << inst.m() << "," << inst.a() << ")";
}

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors))
{
    if (colors_.empty())
        throw std::invalid_argument("a coloring covers [n] with n >= 1");
}

Coloring Coloring::parse(std::string_view text)
{
    std::vector<Color> colors;
    colors.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
        case 'R': colors.push_back(Color::Red); break;
        case 'B': colors.push_back(Color::Blue); break;
        default:
            throw ParseError("coloring string may only contain 'R' and 'B', found '" + std::string(1, ch) + "'");
        }
    }
    if (colors.empty())
        throw ParseError("empty coloring string");
    return Coloring(std::move(colors));
}

Coloring Coloring::from_red_set(Int n, std::span<const Int> red)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    std::vector<Color> colors(static_cast<std::size_t>(n), Color::Blue);
    for (Int r : red) {
        if (r < 1 || r > n)
            throw std::invalid_argument("red element " + std::to_string(r) + " outside [" + std::to_string(n) + "]");
        colors[static_cast<std::size_t>(r - 1)] = Color::Red;
    }
    return Coloring(std::move(colors));
}

Color Coloring::at(Int element) const
{
    if (element < 1 || element > size())
        throw std::out_of_range("element " + std::to_string(element) + " outside the colored interval");
    return colors_[static_cast<std::size_t>(element - 1)];
}

std::vector<Int> Coloring::members(Color c) const
{
    std::vector<Int> out;
    for (std::size_t i = 0; i < colors_.size(); ++i)
        if (colors_[i] == c)
            out.push_back(static_cast<Int>(i + 1));
    return out;
}

std::string Coloring::to_string() const
{
    std::string s;
    s.reserve(colors_.size());
    for (Color c : colors_)
        s.push_back(color_char(c));
    return s;
}

Coloring Coloring::prefix(Int n) const
{
    if (n < 1 || n > size())
        throw std::invalid_argument("prefix length out of range");
    return Coloring(std::vector<Color>(colors_.begin(), colors_.begin() + n));
}

Coloring Coloring::swapped() const
{
    std::vector<Color> out(colors_);
    for (Color& c : out)
        c = other(c);
    return Coloring(std::move(out));
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool try_consume(std::string_view token)
    {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token)
    {
        if (!try_consume(token))
            fail("expected '" + std::string(token) + "'");
    }

    Int integer()
    {
        skip_space();
        Int value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        if (first != last && *first == '+')
            ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first)
            fail("expected an integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }

    bool at_end()
    {
        skip_space();
        return pos_ == text_.size();
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

CompactAssignment CompactAssignment::parse(std::string_view text)
{
    Cursor cur(text);
    cur.expect("[");
    std::vector<Group> groups;
    if (!cur.try_consume("]")) {
        do {
            Group g;
            g.count = cur.integer();
            cur.expect("->");
            g.value = cur.integer();
            groups.push_back(g);
        } while (cur.try_consume(";"));
        cur.expect("]");
    }
    if (!cur.at_end())
        cur.fail("trailing characters");
    return CompactAssignment(std::move(groups));
}

Int CompactAssignment::total_count() const
{
    Int total = 0;
    for (const Group& g : groups_)
        total += g.count;
    return total;
}

std::string CompactAssignment::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < groups_.size(); ++i) {
        if (i)
            os << "; ";
        os << groups_[i].count << "->" << groups_[i].value;
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CompactAssignment& asg)
{
    return os << asg.to_string();
}

namespace {

void check_structure(const EquationInstance& inst, const CompactAssignment& asg)
{
    const auto& groups = asg.groups();
    if (groups.empty())
        throw std::invalid_argument("compact assignment has no groups");
    for (const Group& g : groups) {
        if (g.count < 0)
            throw StructureError("negative count in " + asg.to_string());
        if (g.value < 1)
            throw std::invalid_argument("non-positive value in " + asg.to_string());
    }
    if (asg.total_count() != inst.m())
        throw StructureError("counts of " + asg.to_string() + " sum to " + std::to_string(asg.total_count()) +
                             ", expected m=" + std::to_string(inst.m()));
}

} // namespace

bool validate_compact(const EquationInstance& inst, const CompactAssignment& asg)
{
    check_structure(inst, asg);
    // x_m is the last variable, so it belongs to the last group with a nonzero count.
    const auto& groups = asg.groups();
    auto last = std::find_if(groups.rbegin(), groups.rend(), [](const Group& g) { return g.count > 0; });
    Int weighted = 0;
    for (const Group& g : groups)
        weighted += g.count * g.value;
    const Int right_value = last->value;
    return weighted - right_value == inst.a() * right_value;
}

std::vector<Int> expand_compact(const EquationInstance& inst, const CompactAssignment& asg)
{
    check_structure(inst, asg);
    std::vector<Int> flat;
    flat.reserve(static_cast<std::size_t>(inst.m()));
    for (const Group& g : asg.groups())
        flat.insert(flat.end(), static_cast<std::size_t>(g.count), g.value);
    return flat;
}

bool witness_holds(const EquationInstance& inst, const Coloring& col, const MonoWitness& w)
{
    if (!validate_compact(inst, w.assignment))
        return false;
    for (const Group& g : w.assignment.groups()) {
        if (g.count == 0)
            continue;
        if (g.value > col.size() || col.at(g.value) != w.color)
            return false;
    }
    return true;
}

} // namespace rado
