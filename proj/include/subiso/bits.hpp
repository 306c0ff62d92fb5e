#ifndef SUBISO_BITS_HPP
#define SUBISO_BITS_HPP

#include <cstdint>
#include <vector>

namespace subiso {

// Fixed-size packed bit array. Kept deliberately small: the tensor kernels
// and weight sequences need word-level access that std::vector<bool> hides.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    std::size_t word_count() const { return words_.size(); }
    std::uint64_t* data() { return words_.data(); }
    const std::uint64_t* data() const { return words_.data(); }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

    void clear_all() { std::fill(words_.begin(), words_.end(), 0); }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::size_t(__builtin_popcountll(w));
        return c;
    }

    void or_with(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    }
    void and_with(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    }

    // OR in `o` shifted left by `shift` bit positions (o's bit j lands at j+shift).
    void or_shifted(const Bits& o, std::size_t shift, std::size_t o_bits) {
        std::size_t word_shift = shift >> 6, bit_shift = shift & 63;
        std::size_t ow = (o_bits + 63) / 64;
        for (std::size_t i = 0; i < ow && i + word_shift < words_.size(); ++i) {
            std::uint64_t w = o.words_[i];
            if (!w) continue;
            words_[i + word_shift] |= w << bit_shift;
            if (bit_shift && i + word_shift + 1 < words_.size())
                words_[i + word_shift + 1] |= w >> (64 - bit_shift);
        }
        trim_tail();
    }

    bool operator==(const Bits& o) const {
        return size_ == o.size_ && words_ == o.words_;
    }

private:
    void trim_tail() {
        if (size_ & 63) {
            std::uint64_t mask = (std::uint64_t(1) << (size_ & 63)) - 1;
            if (!words_.empty()) words_.back() &= mask;
        }
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace subiso

#endif
