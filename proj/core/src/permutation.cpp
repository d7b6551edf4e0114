#include "cosetgb/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cosetgb {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            int value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + (text[i] - '0');
                ++i;
            }
            out.push_back(value);
        } else {
            ++i;
        }
    }
    return out;
}

} // namespace

Permutation::Permutation(int n) {
    if (n < 0) throw std::invalid_argument("Permutation: negative size");
    image_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) image_[static_cast<std::size_t>(i)] = i;
}

Permutation Permutation::from_images(const std::vector<int>& one_based_images) {
    const int n = static_cast<int>(one_based_images.size());
    Permutation sigma(n);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        const int img = one_based_images[static_cast<std::size_t>(i)];
        if (img < 1 || img > n || seen[static_cast<std::size_t>(img - 1)])
            throw std::invalid_argument("Permutation: image list is not a bijection on 1..n");
        seen[static_cast<std::size_t>(img - 1)] = true;
        sigma.image_[static_cast<std::size_t>(i)] = img - 1;
    }
    return sigma;
}

Permutation Permutation::parse(const std::string& text, int n) {
    const bool cycles = text.find('(') != std::string::npos;
    if (!cycles) {
        std::vector<int> images = parse_int_list(text);
        if (static_cast<int>(images.size()) != n)
            throw std::invalid_argument("Permutation::parse: expected " + std::to_string(n) +
                                        " images in list notation");
        return from_images(images);
    }
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t open = text.find('(', pos);
        if (open == std::string::npos) break;
        const std::size_t close = text.find(')', open);
        if (close == std::string::npos)
            throw std::invalid_argument("Permutation::parse: unbalanced cycle notation");
        std::vector<int> cycle = parse_int_list(text.substr(open + 1, close - open - 1));
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int from = cycle[i];
            const int to = cycle[(i + 1) % cycle.size()];
            if (from < 1 || from > n)
                throw std::invalid_argument("Permutation::parse: cycle entry out of range");
            images[static_cast<std::size_t>(from - 1)] = to;
        }
        pos = close + 1;
    }
    return from_images(images);
}

int Permutation::image(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("Permutation::image");
    return image_[static_cast<std::size_t>(i - 1)] + 1;
}

int Permutation::preimage(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("Permutation::preimage");
    for (int j = 0; j < size(); ++j)
        if (image_[static_cast<std::size_t>(j)] == i - 1) return j + 1;
    throw std::logic_error("Permutation::preimage: broken bijection");
}

Permutation Permutation::inverse() const {
    Permutation inv(size());
    for (int i = 0; i < size(); ++i)
        inv.image_[image_[static_cast<std::size_t>(i)]] = i;
    return inv;
}

Permutation Permutation::after(const Permutation& first) const {
    if (size() != first.size())
        throw std::invalid_argument("Permutation::after: size mismatch");
    Permutation out(size());
    for (int i = 0; i < size(); ++i)
        out.image_[static_cast<std::size_t>(i)] =
            image_[first.image_[static_cast<std::size_t>(i)]];
    return out;
}

std::vector<int> Permutation::images() const {
    std::vector<int> out(static_cast<std::size_t>(size()));
    for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(i)] = image(i + 1);
    return out;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (image_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

std::string Permutation::list_string() const {
    std::string out = "[";
    for (int i = 1; i <= size(); ++i) {
        if (i > 1) out += ",";
        out += std::to_string(image(i));
    }
    out += "]";
    return out;
}

std::string Permutation::cycle_string() const {
    std::string out;
    std::vector<bool> done(static_cast<std::size_t>(size()), false);
    for (int start = 1; start <= size(); ++start) {
        if (done[static_cast<std::size_t>(start - 1)] || image(start) == start) {
            done[static_cast<std::size_t>(start - 1)] = true;
            continue;
        }
        out += "(";
        int i = start;
        bool first = true;
        while (!done[static_cast<std::size_t>(i - 1)]) {
            if (!first) out += ",";
            out += std::to_string(i);
            done[static_cast<std::size_t>(i - 1)] = true;
            i = image(i);
            first = false;
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

} // namespace cosetgb
