#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace labs {

/// Exact integer energy value. Bounded by L(L-1)(2L-1)/6 < L^3, so 64 bits
/// cover any practical sequence length without rounding.
using Energy = std::int64_t;

/// Fixed-length vector of binary genes. The length is set at construction
/// and never changes; every gene is exactly 0 or 1.
class BitGenome {
public:
    static constexpr std::size_t min_length = 2;

    explicit BitGenome(std::size_t length, std::uint8_t fill = 0)
        : genes_(checked_length(length), checked_gene(fill)) {}

    explicit BitGenome(std::vector<std::uint8_t> bits) : genes_(std::move(bits)) {
        checked_length(genes_.size());
        for (std::uint8_t b : genes_) checked_gene(b);
    }

    /// Parses a string of '0'/'1' characters.
    static BitGenome from_string(std::string_view text) {
        std::vector<std::uint8_t> bits;
        bits.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("BitGenome: invalid character '" +
                                            std::string(1, c) + "' in bit string");
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return BitGenome(std::move(bits));
    }

    std::size_t size() const noexcept { return genes_.size(); }

    std::uint8_t operator[](std::size_t i) const { return genes_[i]; }

    void set(std::size_t i, std::uint8_t value) { genes_[i] = checked_gene(value); }

    void flip(std::size_t i) { genes_[i] ^= 1u; }

    /// Spin of gene i under the mapping s = 2x - 1, in {-1, +1}.
    int spin(std::size_t i) const { return 2 * static_cast<int>(genes_[i]) - 1; }

    std::string to_string() const {
        std::string s(genes_.size(), '0');
        for (std::size_t i = 0; i < genes_.size(); ++i) s[i] = char('0' + genes_[i]);
        return s;
    }

    const std::vector<std::uint8_t>& bits() const noexcept { return genes_; }

    auto begin() const noexcept { return genes_.begin(); }
    auto end() const noexcept { return genes_.end(); }

    friend bool operator==(const BitGenome&, const BitGenome&) = default;

private:
    static std::size_t checked_length(std::size_t length) {
        if (length < min_length)
            throw std::invalid_argument("BitGenome: length " + std::to_string(length) +
                                        " below minimum " + std::to_string(min_length));
        return length;
    }

    static std::uint8_t checked_gene(std::uint8_t value) {
        if (value > 1)
            throw std::invalid_argument("BitGenome: gene value " + std::to_string(value) +
                                        " is not 0 or 1");
        return value;
    }

    std::vector<std::uint8_t> genes_;
};

/// Read-only ±1 view of a genome: spins()[i] = 2 * genome[i] - 1.
class SpinView {
public:
    explicit SpinView(const BitGenome& genome) : genome_(&genome) {}

    std::size_t size() const noexcept { return genome_->size(); }
    int operator[](std::size_t i) const { return genome_->spin(i); }

    std::vector<int> to_vector() const {
        std::vector<int> spins(size());
        for (std::size_t i = 0; i < spins.size(); ++i) spins[i] = (*this)[i];
        return spins;
    }

private:
    const BitGenome* genome_;
};

/// Inverse of SpinView: rebuilds the genome from ±1 spins.
inline BitGenome genome_from_spins(std::span<const int> spins) {
    std::vector<std::uint8_t> bits;
    bits.reserve(spins.size());
    for (int s : spins) {
        if (s != -1 && s != 1)
            throw std::invalid_argument("genome_from_spins: spin value " +
                                        std::to_string(s) + " is not -1 or +1");
        bits.push_back(s > 0 ? 1u : 0u);
    }
    return BitGenome(std::move(bits));
}

}  // namespace labs
