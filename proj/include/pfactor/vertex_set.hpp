#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

// Number of vertices a Graph can hold. Raising it widens every adjacency row
// to ceil(N/64) machine words; all algorithms are written against VertexSet.
#ifndef PFACTOR_MAX_VERTICES
#define PFACTOR_MAX_VERTICES 64
#endif

namespace pfactor {

inline constexpr std::size_t kMaxVertices = PFACTOR_MAX_VERTICES;
inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t kRowWords = (kMaxVertices + kWordBits - 1) / kWordBits;

static_assert(kMaxVertices >= 1, "PFACTOR_MAX_VERTICES must be positive");

/// Fixed-capacity bit set over vertex indices [0, kMaxVertices).
class VertexSet {
public:
    using Word = std::uint64_t;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = std::size_t;
        using difference_type = std::ptrdiff_t;
        using pointer = const std::size_t*;
        using reference = std::size_t;

        iterator() = default;
        iterator(const std::array<Word, kRowWords>& words, std::size_t word)
            : words_(&words), word_(word) {
            if (word_ < kRowWords) {
                current_ = (*words_)[word_];
                advance_to_nonzero();
            }
        }

        std::size_t operator*() const {
            return word_ * kWordBits + static_cast<std::size_t>(std::countr_zero(current_));
        }
        iterator& operator++() {
            current_ &= current_ - 1;
            advance_to_nonzero();
            return *this;
        }
        iterator operator++(int) {
            iterator copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const iterator& other) const { return word_ == other.word_ && current_ == other.current_; }

    private:
        void advance_to_nonzero() {
            while (current_ == 0) {
                if (++word_ >= kRowWords) {
                    word_ = kRowWords;
                    return;
                }
                current_ = (*words_)[word_];
            }
        }

        const std::array<Word, kRowWords>* words_ = nullptr;
        std::size_t word_ = kRowWords;
        Word current_ = 0;
    };

    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<std::size_t> vertices) {
        for (std::size_t v : vertices) insert(v);
    }

    /// The set {0, ..., n-1}.
    static VertexSet range(std::size_t n) {
        VertexSet s;
        for (std::size_t w = 0; w < kRowWords && n > 0; ++w) {
            std::size_t take = n < kWordBits ? n : kWordBits;
            s.words_[w] = take == kWordBits ? ~Word{0} : ((Word{1} << take) - 1);
            n -= take;
        }
        return s;
    }

    /// Low 64 vertices taken from a machine word.
    static VertexSet from_word(Word bits) {
        VertexSet s;
        s.words_[0] = bits;
        return s;
    }

    bool contains(std::size_t v) const { return (words_[v / kWordBits] >> (v % kWordBits)) & 1U; }
    void insert(std::size_t v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
    void erase(std::size_t v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

    std::size_t size() const {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (Word w : words_)
            if (w != 0) return false;
        return true;
    }
    /// Smallest member; kMaxVertices when empty.
    std::size_t lowest() const {
        for (std::size_t w = 0; w < kRowWords; ++w)
            if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return kMaxVertices;
    }
    bool intersects(const VertexSet& other) const {
        for (std::size_t w = 0; w < kRowWords; ++w)
            if ((words_[w] & other.words_[w]) != 0) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& other) const {
        for (std::size_t w = 0; w < kRowWords; ++w)
            if ((words_[w] & ~other.words_[w]) != 0) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t w = 0; w < kRowWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t w = 0; w < kRowWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o) {
        for (std::size_t w = 0; w < kRowWords; ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t w = 0; w < kRowWords; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    iterator begin() const { return iterator(words_, 0); }
    iterator end() const { return iterator(words_, kRowWords); }

    std::vector<std::size_t> to_vector() const { return {begin(), end()}; }
    const std::array<Word, kRowWords>& words() const { return words_; }

private:
    std::array<Word, kRowWords> words_{};
};

}  // namespace pfactor
