#ifndef TL_DIAGRAM_HPP
#define TL_DIAGRAM_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "tl/dyck_path.hpp"
#include "tl/scalar.hpp"

namespace tl {

enum class Flavor { A, B };

inline const char* flavor_name(Flavor f) { return f == Flavor::A ? "A" : "B"; }

/*
 * Planar Temperley-Lieb diagram in linearized (folded) form: a non-crossing
 * perfect matching on the points 1..2n, with optional dots on outermost arcs.
 *
 * The strand picture maps onto this via bottom point b_k -> k and top point
 * t_k -> 2n+1-k, so an n-strand diagram and its folded cap diagram are the
 * same object. Dots occur in type B only; basis diagrams carry at most one
 * dot per arc.
 */
class Diagram {
public:
    using Arc = std::pair<int, int>;

    Diagram() = default;  // the empty diagram (n = 0)
    Diagram(int n, std::vector<Arc> arcs, std::vector<Arc> dots = {});
    static Diagram identity(int n);

    int n() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<Arc>& dots() const { return dots_; }
    bool has_arc(const Arc& a) const;
    bool has_dot(const Arc& a) const;
    bool is_identity() const;
    // The other endpoint of the arc through p.
    int partner(int p) const;
    // An arc is outermost when it is nested inside no other arc.
    bool is_outermost(const Arc& a) const;
    std::vector<Arc> outermost_arcs() const;

    // Text grammar: concatenated "(i,j)" pairs, each optionally suffixed '*'.
    std::string to_text() const;
    static Diagram parse(const std::string& text);

    auto operator<=>(const Diagram&) const = default;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;  // sorted, i < j within each arc
    std::vector<Arc> dots_;  // sorted subset of arcs_
};

// e_i for 1 <= i <= n-1 (types A and B); e_0 (type B) is the identity with a
// dot on the leftmost strand.
Diagram generator_diagram(Flavor f, int n, int i);

// Morrison's g_{n,i}: single bottom cap at position i, single top-right cup,
// the rest joined order-preservingly; g_{n,n} is the identity and g_{n,0}
// (type B) carries a dot on the bottom cap.
Diagram g_diagram(Flavor f, int n, int i);

// Stack d1 on top of d2, trace the composite, and reduce: plain loops give
// -[2] each; an arc or loop carrying k >= 1 dots contributes (-[1]_s)^{k-1}
// and keeps one dot; a loop with its one remaining dot gives qs^{-1}+q^{-1}s
// and vanishes. Returns the accumulated factor and the reduced basis diagram.
std::pair<Scalar, Diagram> compose(const Diagram& d1, const Diagram& d2);

// Folding bijection: position k reads U when k is a left arc endpoint and R
// when it is a right one; dotted arcs become dotted step-pairs.
DottedPath to_path(const Diagram& d);
Diagram from_path(const DottedPath& p);

// Positions of innermost caps: all i in [1, n] with an undotted arc (i, i+1),
// plus 0 when the arc (1,2) is present and dotted.
std::vector<int> innermost_caps(const Diagram& d);

// Remove the innermost cap at position i (the dotted (1,2) when i = 0) and
// relabel; the result has n-1 strands.
Diagram remove_cap(const Diagram& d, int i);

// Every basis diagram of size n: the Catalan(n) non-crossing matchings for
// type A; for type B additionally every subset of outermost arcs dotted.
// Deterministic order: lexicographic by arc list, then dot list.
std::vector<Diagram> all_diagrams(Flavor f, int n);

}  // namespace tl

#endif
