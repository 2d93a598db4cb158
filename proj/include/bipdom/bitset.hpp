#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace bipdom {

/// Fixed-length dynamic bitset over dense vertex indices.
class Bitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_(word_count(size), 0) {}

    static std::size_t word_count(std::size_t size) { return (size + kWordBits - 1) / kWordBits; }

    std::size_t size() const noexcept { return size_; }
    const std::vector<Word>& words() const noexcept { return words_; }

    bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

    void set_all() {
        for (auto& w : words_) w = ~Word{0};
        trim();
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }
    bool any() const { return !none(); }

    bool intersects(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    Bitset& operator|=(const Bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    /// Clears every bit that is set in `other`.
    Bitset& subtract(const Bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend bool operator==(const Bitset&, const Bitset&) = default;

    /// Calls f(index) for every set bit in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            Word w = words_[wi];
            while (w != 0) {
                f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

private:
    void trim() {
        if (size_ % kWordBits != 0 && !words_.empty())
            words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

} // namespace bipdom
