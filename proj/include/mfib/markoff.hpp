#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfib/bigint.hpp"
#include "mfib/bignat.hpp"

namespace mfib {

// Ordered positive triple 0 < x <= y <= z.
class Triple {
  public:
    // Sorts its inputs; permutations of a solution are the same solution.
    static Triple of(BigNat a, BigNat b, BigNat c);
    // Strict variant: throws std::invalid_argument unless already ordered.
    static Triple ordered(BigNat x, BigNat y, BigNat z);

    const BigNat& x() const { return x_; }
    const BigNat& y() const { return y_; }
    const BigNat& z() const { return z_; }

    std::string to_string() const;  // "(x,y,z)"

    friend bool operator==(const Triple& a, const Triple& b) = default;
    friend std::strong_ordering operator<=>(const Triple& a, const Triple& b) = default;

  private:
    Triple(BigNat x, BigNat y, BigNat z)
        : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}
    BigNat x_, y_, z_;
};

// m = x^2 + y^2 + z^2 - 3xyz, exact.
BigInt m_of(const Triple& t);

// z >= 3xy. Defined for m > 0 only; throws std::invalid_argument otherwise.
bool is_minimal(const Triple& t);

// The two Vieta descendants (y, z, 3yz - x) and (x, z, 3xz - y), both ordered
// and sharing the parent's m. They coincide exactly when x == y.
std::pair<Triple, Triple> vieta_children(const Triple& t);

// Reordering of (x, y, 3xy - z); nullopt when t is minimal (tree root).
// Requires m > 0.
std::optional<Triple> vieta_parent(const Triple& t);

// Fibonacci index triple 2 <= a <= b <= c.
struct FibTriple {
    int a = 2, b = 2, c = 2;
    FibTriple() = default;
    FibTriple(int a_, int b_, int c_);
    Triple values() const;
    friend bool operator==(const FibTriple&, const FibTriple&) = default;
    friend auto operator<=>(const FibTriple&, const FibTriple&) = default;
};

// m(a,b,c) = F(a)^2 + F(b)^2 + F(c)^2 - 3 F(a)F(b)F(c).
BigInt fib_m(const FibTriple& ft);
BigInt fib_m(int a, int b, int c);

// Breadth-first tree of Vieta descendants from a minimal root; duplicate
// children at x == y nodes are merged (the (1,1,3) -> (1,3,8) single edge).
class MarkoffTree {
  public:
    struct Node {
        Triple triple;
        int parent = -1;  // -1 for the root
        std::vector<int> children;
        int depth = 0;
    };

    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& root() const { return nodes_.front(); }
    int depth() const { return depth_; }
    const BigInt& m() const { return m_; }

    // DOT graph; nodes whose three components are all Fibonacci numbers are
    // emitted bold, mirroring the bold all-Fibonacci branch of the 2-tree.
    std::string to_dot() const;
    // Nested JSON: {"triple": [...], "fibonacci": bool, "children": [...]}.
    std::string to_json_nested() const;
    std::string to_text() const;

    friend MarkoffTree generate_tree(const Triple& root, int depth);

  private:
    std::vector<Node> nodes_;
    int depth_ = 0;
    BigInt m_;
};

// Throws std::invalid_argument unless m(root) > 0 and root is minimal.
MarkoffTree generate_tree(const Triple& root, int depth);

}  // namespace mfib
