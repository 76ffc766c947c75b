#include "tl/dyck_path.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tl {

DyckPath::DyckPath(std::string word) : word_(std::move(word)) {
    int h = 0;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        char c = word_[i];
        if (c == 'U') {
            ++h;
        } else if (c == 'R') {
            --h;
        } else {
            throw std::invalid_argument("path: position " + std::to_string(i + 1) +
                                        ": expected 'U' or 'R', got '" + std::string(1, c) + "'");
        }
        if (h < 0)
            throw std::invalid_argument("path: position " + std::to_string(i + 1) +
                                        ": path drops below height 0");
    }
    if (h != 0)
        throw std::invalid_argument("path: unbalanced word, ends at height " + std::to_string(h));
}

DyckPath DyckPath::top(int n) {
    if (n < 0) throw std::invalid_argument("path: negative size");
    return DyckPath(std::string(n, 'U') + std::string(n, 'R'));
}

int DyckPath::height(int x) const {
    int h = 0;
    for (int i = 0; i < x; ++i) h += word_[i] == 'U' ? 1 : -1;
    return h;
}

int DyckPath::match_of(int pos) const {
    if (pos < 1 || pos > 2 * size() || word_[pos - 1] != 'U')
        throw std::invalid_argument("path: no U step at position " + std::to_string(pos));
    int depth = 0;
    for (int i = pos; i <= 2 * size(); ++i) {
        depth += word_[i - 1] == 'U' ? 1 : -1;
        if (depth == 0) return i;
    }
    throw std::logic_error("path: unmatched U");  // unreachable on valid paths
}

DottedPath::DottedPath(DyckPath p, std::vector<std::pair<int, int>> d)
    : path(std::move(p)), dots(std::move(d)) {
    std::sort(dots.begin(), dots.end());
    for (std::size_t k = 0; k < dots.size(); ++k) {
        auto [i, j] = dots[k];
        if (k > 0 && dots[k - 1] == dots[k])
            throw std::invalid_argument("path: duplicate dotted pair");
        if (i < 1 || j > 2 * path.size() || path.step(i) != 'U' || path.match_of(i) != j)
            throw std::invalid_argument("path: dotted pair (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") is not a matched U-R pair");
        if (path.height(i - 1) != 0)
            throw std::invalid_argument("path: dotted pair (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") is not outermost");
    }
}

}  // namespace tl
