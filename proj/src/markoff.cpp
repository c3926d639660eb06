#include "mfib/markoff.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "mfib/fib.hpp"

namespace mfib {

Triple Triple::of(BigNat a, BigNat b, BigNat c) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw std::invalid_argument("Triple: entries must be positive");
    if (b < a) std::swap(a, b);
    if (c < b) std::swap(b, c);
    if (b < a) std::swap(a, b);
    return Triple{std::move(a), std::move(b), std::move(c)};
}

Triple Triple::ordered(BigNat x, BigNat y, BigNat z) {
    if (x.is_zero()) throw std::invalid_argument("Triple: entries must be positive");
    if (y < x || z < y) throw std::invalid_argument("Triple: not ordered");
    return Triple{std::move(x), std::move(y), std::move(z)};
}

std::string Triple::to_string() const {
    return "(" + x_.to_decimal() + "," + y_.to_decimal() + "," + z_.to_decimal() + ")";
}

BigInt m_of(const Triple& t) {
    BigNat squares = t.x() * t.x() + t.y() * t.y() + t.z() * t.z();
    BigNat cross = BigNat{3} * t.x() * t.y() * t.z();
    return BigInt{squares, 1} - BigInt{cross, 1};
}

bool is_minimal(const Triple& t) {
    if (m_of(t).sign() <= 0)
        throw std::invalid_argument("is_minimal: defined for m > 0 only");
    return t.z() >= BigNat{3} * t.x() * t.y();
}

std::pair<Triple, Triple> vieta_children(const Triple& t) {
    BigNat c1 = BigNat{3} * t.y() * t.z() - t.x();
    BigNat c2 = BigNat{3} * t.x() * t.z() - t.y();
    return {Triple::of(t.y(), t.z(), std::move(c1)), Triple::of(t.x(), t.z(), std::move(c2))};
}

std::optional<Triple> vieta_parent(const Triple& t) {
    if (is_minimal(t)) return std::nullopt;
    BigNat w = BigNat{3} * t.x() * t.y() - t.z();  // positive: z < 3xy here
    return Triple::of(t.x(), t.y(), std::move(w));
}

FibTriple::FibTriple(int a_, int b_, int c_) : a(a_), b(b_), c(c_) {
    if (a < 2 || b < a || c < b)
        throw std::invalid_argument("FibTriple: need 2 <= a <= b <= c");
}

Triple FibTriple::values() const { return Triple::of(fib(a), fib(b), fib(c)); }

BigInt fib_m(int a, int b, int c) { return fib_m(FibTriple{a, b, c}); }

BigInt fib_m(const FibTriple& ft) {
    BigNat fa = fib(ft.a), fb = fib(ft.b), fc = fib(ft.c);
    BigNat squares = fa * fa + fb * fb + fc * fc;
    BigNat cross = BigNat{3} * fa * fb * fc;
    return BigInt{squares, 1} - BigInt{cross, 1};
}

MarkoffTree generate_tree(const Triple& root, int depth) {
    if (depth < 0) throw std::invalid_argument("generate_tree: negative depth");
    BigInt m = m_of(root);
    if (m.sign() <= 0) throw std::invalid_argument("generate_tree: root must have m > 0");
    if (!is_minimal(root)) throw std::invalid_argument("generate_tree: root must be minimal");
    MarkoffTree tree;
    tree.m_ = std::move(m);
    tree.depth_ = depth;
    tree.nodes_.push_back({root, -1, {}, 0});
    for (std::size_t i = 0; i < tree.nodes_.size(); ++i) {
        if (tree.nodes_[i].depth == depth) continue;
        auto [c1, c2] = vieta_children(tree.nodes_[i].triple);
        const int d = tree.nodes_[i].depth + 1;
        auto add = [&](Triple t) {
            int id = (int)tree.nodes_.size();
            tree.nodes_.push_back({std::move(t), (int)i, {}, d});
            tree.nodes_[i].children.push_back(id);
        };
        add(c1);
        if (!(c2 == c1)) add(c2);
    }
    return tree;
}

namespace {

bool all_fibonacci(const Triple& t) {
    return fib_index(t.x()) && fib_index(t.y()) && fib_index(t.z());
}

}  // namespace

std::string MarkoffTree::to_dot() const {
    std::ostringstream os;
    os << "digraph markoff_tree {\n  rankdir=LR;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        os << "  n" << i << " [label=\"" << nodes_[i].triple.to_string() << "\"";
        if (all_fibonacci(nodes_[i].triple)) os << ", style=bold";
        os << "];\n";
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        for (int c : nodes_[i].children) os << "  n" << i << " -> n" << c << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

nlohmann::ordered_json node_json(const MarkoffTree& tree, int id) {
    const auto& n = tree.nodes()[id];
    nlohmann::ordered_json j;
    j["triple"] = {n.triple.x().to_decimal(), n.triple.y().to_decimal(),
                   n.triple.z().to_decimal()};
    j["fibonacci"] = all_fibonacci(n.triple);
    auto children = nlohmann::ordered_json::array();
    for (int c : n.children) children.push_back(node_json(tree, c));
    j["children"] = std::move(children);
    return j;
}

}  // namespace

std::string MarkoffTree::to_json_nested() const {
    return node_json(*this, 0).dump();
}

std::string MarkoffTree::to_text() const {
    std::ostringstream os;
    // depth-first with indentation
    std::vector<std::pair<int, int>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [id, indent] = stack.back();
        stack.pop_back();
        os << std::string(indent * 2, ' ') << nodes_[id].triple.to_string();
        if (all_fibonacci(nodes_[id].triple)) os << " *";
        os << '\n';
        const auto& ch = nodes_[id].children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back({*it, indent + 1});
    }
    return os.str();
}

}  // namespace mfib
