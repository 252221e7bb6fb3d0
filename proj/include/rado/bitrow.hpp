#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rado {

/// Fixed-width bit vector over sums 0..size()-1. Shifts drop bits that fall off the top.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }

    bool test(std::size_t i) const noexcept { return i < bits_ && ((words_[i >> 6] >> (i & 63)) & 1u); }

    void set(std::size_t i) noexcept
    {
        if (i < bits_)
            words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset() noexcept { std::fill(words_.begin(), words_.end(), 0); }

    void assign(const BitRow& other) noexcept { std::copy(other.words_.begin(), other.words_.end(), words_.begin()); }

    /// *this |= src << shift. `src` must have the same width and must not alias *this.
    void or_shifted(const BitRow& src, std::size_t shift) noexcept
    {
        const std::size_t n = words_.size();
        const std::size_t ws = shift >> 6;
        const unsigned bs = static_cast<unsigned>(shift & 63);
        if (ws >= n)
            return;
        if (bs == 0) {
            for (std::size_t i = ws; i < n; ++i)
                words_[i] |= src.words_[i - ws];
        } else {
            for (std::size_t i = n - 1; i > ws; --i)
                words_[i] |= (src.words_[i - ws] << bs) | (src.words_[i - ws - 1] >> (64 - bs));
            words_[ws] |= src.words_[0] << bs;
        }
        trim();
    }

    bool intersects(const BitRow& other) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    std::size_t count() const noexcept
    {
        std::size_t total = 0;
        for (auto w : words_)
            total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

private:
    void trim() noexcept
    {
        if (const unsigned tail = static_cast<unsigned>(bits_ & 63); tail != 0)
            words_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace rado
