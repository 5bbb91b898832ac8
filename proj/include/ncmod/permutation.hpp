#pragma once

#include <cstddef>
#include <vector>

#include "ncmod/error.hpp"

namespace ncmod {

/// A bijection of {0, ..., n-1}, stored as the image sequence.
class Permutation {
public:
    /// Validates that `image` is a bijection on {0..n-1}.
    explicit Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
        std::vector<bool> seen(image_.size(), false);
        for (std::size_t v : image_) {
            if (v >= image_.size() || seen[v])
                throw DomainError("permutation: image is not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t n) {
        std::vector<std::size_t> im(n);
        for (std::size_t i = 0; i < n; ++i) im[i] = i;
        return Permutation(std::move(im));
    }

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_.at(i); }
    const std::vector<std::size_t>& image() const { return image_; }

    /// (-1)^(number of inversions).
    int parity() const {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < image_.size(); ++i)
            for (std::size_t j = i + 1; j < image_.size(); ++j)
                if (image_[i] > image_[j]) ++inversions;
        return inversions % 2 == 0 ? 1 : -1;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.image_ == b.image_;
    }

private:
    std::vector<std::size_t> image_;
};

/// compose(p, q) applies q first: (p ∘ q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw DimensionError("permutation: size mismatch in compose");
    std::vector<std::size_t> im(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) im[i] = p(q(i));
    return Permutation(std::move(im));
}

inline int parity(const Permutation& p) { return p.parity(); }

} // namespace ncmod
