#pragma once

#include <string>
#include <vector>

namespace cosetgb {

/// Bijection on positions 1..n. List notation [s(1),...,s(n)] and cycle
/// notation "(1,10,2)(4,5)" are both accepted by parse() and offered by the
/// printers.
class Permutation {
public:
    explicit Permutation(int n); // identity
    static Permutation from_images(const std::vector<int>& one_based_images);
    static Permutation parse(const std::string& text, int n);

    int size() const { return static_cast<int>(image_.size()); }
    int image(int i) const;    // 1-based
    int preimage(int i) const; // 1-based

    Permutation inverse() const;
    /// Composition: (*this)(first(i)).
    Permutation after(const Permutation& first) const;

    std::vector<int> images() const; // 1-based list
    bool is_identity() const;

    std::string list_string() const;
    std::string cycle_string() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> image_; // 0-based: image_[i] = sigma(i+1) - 1
};

} // namespace cosetgb
