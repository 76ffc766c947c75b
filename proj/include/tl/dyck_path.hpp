#ifndef TL_DYCK_PATH_HPP
#define TL_DYCK_PATH_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace tl {

/*
 * Dyck path of size n: a word of n U's and n R's whose every prefix has
 * at least as many U's as R's. Steps are 1-based in all position APIs.
 */
class DyckPath {
public:
    DyckPath() = default;
    explicit DyckPath(std::string word);         // validates, throws std::invalid_argument
    static DyckPath top(int n);                  // U^n R^n

    int size() const { return static_cast<int>(word_.size()) / 2; }
    const std::string& word() const { return word_; }
    char step(int pos) const { return word_[pos - 1]; }

    // Height of the path at integer abscissa x, 0 <= x <= 2n.
    int height(int x) const;
    // Matching R position for the U at pos (parenthesis matching).
    int match_of(int pos) const;

    auto operator<=>(const DyckPath&) const = default;

private:
    std::string word_;
};

/*
 * Dyck path together with dotted matched step-pairs. Each dotted pair is
 * the two endpoints of an outermost cap (no enclosing matched pair).
 */
struct DottedPath {
    DyckPath path;
    std::vector<std::pair<int, int>> dots;       // sorted pairs (i, j), i < j

    DottedPath() = default;
    explicit DottedPath(DyckPath p, std::vector<std::pair<int, int>> d = {});

    // Cap size l(c) = (j - i + 1) / 2 of a dotted pair.
    static int cap_size(const std::pair<int, int>& c) { return (c.second - c.first + 1) / 2; }

    auto operator<=>(const DottedPath&) const = default;
};

}  // namespace tl

#endif
