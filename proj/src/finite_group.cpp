#include "wreath/finite_group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace wreath {

namespace {

constexpr int kMaxNamedOrder = 64;
constexpr int kFullAssocCheckOrder = 64;

int checked_param(const std::string& name, std::optional<int> parameter) {
    if (!parameter)
        throw std::invalid_argument("named group '" + name + "' requires a parameter");
    return *parameter;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> labels) {
    const std::size_t n = table.size();
    if (n == 0) throw std::invalid_argument("Cayley table: empty");
    FiniteGroup G;
    G.order_ = static_cast<int>(n);
    G.table_.reserve(n * n);
    for (const auto& row : table) {
        if (row.size() != n) throw std::invalid_argument("Cayley table: not square");
        for (int v : row) {
            if (v < 0 || v >= static_cast<int>(n))
                throw std::invalid_argument("Cayley table: entry out of range");
            G.table_.push_back(v);
        }
    }
    if (!labels.empty() && labels.size() != n)
        throw std::invalid_argument("Cayley table: label count does not match order");
    G.labels_ = std::move(labels);
    G.validate_and_normalize();
    return G;
}

void FiniteGroup::validate_and_normalize() {
    const int n = order_;

    // Latin square: every row and column is a permutation of the indices.
    std::vector<bool> seen(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), false);
        for (int b = 0; b < n; ++b) {
            const int v = mul(a, b);
            if (seen[v])
                throw std::invalid_argument("Cayley table: row " + std::to_string(a) +
                                            " is not a permutation (not a Latin square)");
            seen[v] = true;
        }
    }
    for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), false);
        for (int a = 0; a < n; ++a) {
            const int v = mul(a, b);
            if (seen[v])
                throw std::invalid_argument("Cayley table: column " + std::to_string(b) +
                                            " is not a permutation (not a Latin square)");
            seen[v] = true;
        }
    }

    int e = -1;
    for (int cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = mul(cand, a) == a && mul(a, cand) == a;
        if (ok) e = cand;
    }
    if (e < 0) throw std::invalid_argument("Cayley table: no identity element");

    if (e != 0) {
        // Relabel by the transposition 0 <-> e.
        auto relab = [&](int x) { return x == 0 ? e : x == e ? 0 : x; };
        std::vector<int> fresh(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                fresh[static_cast<std::size_t>(relab(a)) * n + relab(b)] = relab(mul(a, b));
        table_ = std::move(fresh);
        if (!labels_.empty()) std::swap(labels_[0], labels_[static_cast<std::size_t>(e)]);
    }

    auto check_triple = [&](int a, int b, int c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::invalid_argument("Cayley table: associativity fails at (" +
                                        std::to_string(a) + ", " + std::to_string(b) + ", " +
                                        std::to_string(c) + ")");
    };
    if (n <= kFullAssocCheckOrder) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int k = 0; k < 200000; ++k) check_triple(pick(rng), pick(rng), pick(rng));
    }

    inv_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == 0) {
                inv_[a] = b;
                break;
            }
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1 || n > kMaxNamedOrder)
        throw std::invalid_argument("cyclic: parameter must be in [1, 64]");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 1 || 2 * n > kMaxNamedOrder)
        throw std::invalid_argument("dihedral: parameter must be in [1, 32] (order 2n)");
    // Element eps*n + a means s^eps r^a; from s r^a s = r^-a the product is
    // (e1, a)(e2, b) = (e1 xor e2, b + a) or (e1 xor e2, b - a) as e2 = 0, 1.
    const int m = 2 * n;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int e1 = 0; e1 < 2; ++e1)
        for (int a = 0; a < n; ++a)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int b = 0; b < n; ++b) {
                    const int c = e2 ? (b - a + n) % n : (a + b) % n;
                    t[e1 * n + a][e2 * n + b] = (e1 ^ e2) * n + c;
                }
    return from_table(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1) throw std::invalid_argument("symmetric: parameter must be at least 1");
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    if (fact > kMaxNamedOrder)
        throw std::invalid_argument("symmetric: order " + std::to_string(fact) +
                                    " exceeds the catalogue cap of 64 (parameter <= 4)");
    std::vector<std::vector<int>> elems;
    std::vector<int> cur(static_cast<std::size_t>(n));
    std::iota(cur.begin(), cur.end(), 0);
    do {
        elems.push_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));

    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);

    const int m = static_cast<int>(elems.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<int> prod(static_cast<std::size_t>(n));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            for (int x = 0; x < n; ++x) prod[x] = elems[b][elems[a][x]];  // a then b
            t[a][b] = index.at(prod);
        }
    return from_table(std::move(t));
}

FiniteGroup FiniteGroup::klein4() {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
    return from_table(std::move(t));
}

FiniteGroup FiniteGroup::quaternion8() {
    // Index = axis*2 + sign: 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k.
    // ax/sg give axis and sign of the axis product, axes numbered e,i,j,k.
    static constexpr int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const int a_ax = a / 2, a_sg = a % 2, b_ax = b / 2, b_sg = b % 2;
            t[a][b] = ax[a_ax][b_ax] * 2 + ((a_sg + b_sg + sg[a_ax][b_ax]) % 2);
        }
    return from_table(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup FiniteGroup::named(const std::string& name, std::optional<int> parameter) {
    if (name == "cyclic") return cyclic(checked_param(name, parameter));
    if (name == "dihedral") return dihedral(checked_param(name, parameter));
    if (name == "symmetric") return symmetric(checked_param(name, parameter));
    if (name == "klein4" || name == "quaternion8") {
        if (parameter)
            throw std::invalid_argument("named group '" + name + "' takes no parameter");
        return name == "klein4" ? klein4() : quaternion8();
    }
    throw std::invalid_argument("unknown group name '" + name +
                                "' (supported: cyclic, dihedral, symmetric, klein4, quaternion8)");
}

int FiniteGroup::element_order(int a) const {
    int ord = 1;
    int x = a;
    while (x != 0) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<Perm> FiniteGroup::regular_representation() const {
    std::vector<Perm> reps;
    reps.reserve(static_cast<std::size_t>(order_));
    for (int g = 0; g < order_; ++g) {
        std::vector<uint32_t> img(static_cast<std::size_t>(order_));
        for (int x = 0; x < order_; ++x) img[x] = static_cast<uint32_t>(mul(x, g));
        reps.emplace_back(std::move(img));
    }
    return reps;
}

std::vector<int> FiniteGroup::generating_set() const {
    std::vector<int> gens;
    std::vector<bool> in(static_cast<std::size_t>(order_), false);
    std::vector<int> members = {0};
    in[0] = true;
    while (static_cast<int>(members.size()) < order_) {
        int g = 0;
        while (in[g]) ++g;
        gens.push_back(g);
        in[g] = true;
        members.push_back(g);
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = 0; j < members.size(); ++j) {
                    const int p = mul(members[i], members[j]);
                    if (!in[p]) {
                        in[p] = true;
                        members.push_back(p);
                        grew = true;
                    }
                }
        }
    }
    return gens;
}

bool GroupAut::is_identity() const {
    for (std::size_t i = 0; i < images.size(); ++i)
        if (images[i] != static_cast<int>(i)) return false;
    return true;
}

GroupAut compose(const GroupAut& a, const GroupAut& b) {
    if (a.images.size() != b.images.size())
        throw std::invalid_argument("GroupAut compose: size mismatch");
    GroupAut r;
    r.images.resize(a.images.size());
    for (std::size_t i = 0; i < r.images.size(); ++i) r.images[i] = b.images[a.images[i]];
    return r;
}

GroupAut inverse(const GroupAut& a) {
    GroupAut r;
    r.images.resize(a.images.size());
    for (std::size_t i = 0; i < r.images.size(); ++i) r.images[a.images[i]] = static_cast<int>(i);
    return r;
}

namespace {

// Backtracking over generator images. A candidate assignment is grown into a
// full map by walking the right Cayley graph from the identity; branches die
// as soon as the walk turns inconsistent or non-injective. The leaf map is
// verified against the full multiplication law before being accepted.
struct AutSearch {
    const FiniteGroup& G;
    std::vector<int> gens;
    std::vector<std::vector<int>> candidates;
    std::vector<int> chosen;
    std::vector<GroupAut> out;

    explicit AutSearch(const FiniteGroup& group) : G(group) {
        gens = G.generating_set();
        candidates.resize(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const int want = G.element_order(gens[i]);
            for (int c = 0; c < G.order(); ++c)
                if (G.element_order(c) == want) candidates[i].push_back(c);
        }
        chosen.assign(gens.size(), -1);
    }

    void run() {
        if (gens.empty()) {  // trivial group
            out.push_back(GroupAut{{0}});
            return;
        }
        dfs(0);
        std::sort(out.begin(), out.end());
    }

    void dfs(std::size_t depth) {
        if (depth == gens.size()) {
            std::vector<int> map;
            if (walk(depth, map)) accept(map);
            return;
        }
        for (int c : candidates[depth]) {
            chosen[depth] = c;
            std::vector<int> map;
            if (walk(depth + 1, map)) dfs(depth + 1);
        }
    }

    // Extends map[0] = 0 along right multiplication by gens[0..k-1]; covers
    // exactly the subgroup they generate. False on any clash.
    bool walk(std::size_t k, std::vector<int>& map) const {
        const int n = G.order();
        map.assign(static_cast<std::size_t>(n), -1);
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        map[0] = 0;
        used[0] = true;
        std::vector<int> queue = {0};
        while (!queue.empty()) {
            const int x = queue.back();
            queue.pop_back();
            for (std::size_t j = 0; j < k; ++j) {
                const int y = G.mul(x, gens[j]);
                const int img = G.mul(map[x], chosen[j]);
                if (map[y] >= 0) {
                    if (map[y] != img) return false;
                } else {
                    if (used[img]) return false;
                    map[y] = img;
                    used[img] = true;
                    queue.push_back(y);
                }
            }
        }
        return true;
    }

    void accept(const std::vector<int>& map) {
        for (int v : map)
            if (v < 0) return;
        for (int a = 0; a < G.order(); ++a)
            for (int b = 0; b < G.order(); ++b)
                if (map[G.mul(a, b)] != G.mul(map[a], map[b])) return;
        out.push_back(GroupAut{map});
    }
};

}  // namespace

std::vector<GroupAut> automorphisms(const FiniteGroup& G, int max_order) {
    if (max_order < 1) throw std::invalid_argument("automorphisms: cap must be positive");
    if (G.order() > max_order)
        throw std::invalid_argument(
            "automorphisms: group order " + std::to_string(G.order()) + " exceeds cap " +
            std::to_string(max_order) + " (use a smaller group or raise the cap)");
    AutSearch search(G);
    search.run();
    return std::move(search.out);
}

AutStructure aut_structure(const std::vector<GroupAut>& auts) {
    if (auts.empty()) throw std::invalid_argument("aut_structure: empty list");
    std::vector<GroupAut> sorted = auts;
    std::sort(sorted.begin(), sorted.end());
    auto member = [&](const GroupAut& a) {
        return std::binary_search(sorted.begin(), sorted.end(), a);
    };
    AutStructure st;
    st.order = auts.size();
    st.is_abelian = true;
    for (const GroupAut& a : auts)
        for (const GroupAut& b : auts) {
            const GroupAut ab = compose(a, b);
            if (!member(ab))
                throw std::invalid_argument("aut_structure: list is not closed under composition");
            if (st.is_abelian && ab != compose(b, a)) st.is_abelian = false;
        }
    st.exponent = 1;
    for (const GroupAut& a : auts) {
        uint64_t ord = 1;
        GroupAut x = a;
        while (!x.is_identity()) {
            x = compose(x, a);
            ++ord;
        }
        st.exponent = std::lcm(st.exponent, ord);
    }
    return st;
}

FiniteGroup read_cayley_table(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::vector<int>> rows;
    std::vector<std::string> labels;
    while (std::getline(in, line)) {
        if (line.rfind("#labels", 0) == 0) {
            std::istringstream ls(line.substr(7));
            std::string w;
            while (ls >> w) labels.push_back(w);
            continue;
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 1)
                throw std::invalid_argument("Cayley table file: bad order line");
            continue;
        }
        std::vector<int> row;
        int v;
        while (ls >> v) row.push_back(v);
        if (row.empty()) continue;
        if (static_cast<int>(rows.size()) == n)
            throw std::invalid_argument("Cayley table file: more rows than the stated order");
        rows.push_back(std::move(row));
    }
    if (n < 1 || static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("Cayley table file: expected " + std::to_string(std::max(n, 0)) +
                                    " rows, got " + std::to_string(rows.size()));
    return FiniteGroup::from_table(std::move(rows), std::move(labels));
}

FiniteGroup read_cayley_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open Cayley table file '" + path + "'");
    return read_cayley_table(in);
}

void write_cayley_table(std::ostream& out, const FiniteGroup& G) {
    out << G.order() << "\n";
    for (int a = 0; a < G.order(); ++a) {
        for (int b = 0; b < G.order(); ++b) {
            if (b) out << ' ';
            out << G.mul(a, b);
        }
        out << "\n";
    }
    if (!G.labels().empty()) {
        out << "#labels";
        for (const auto& l : G.labels()) out << ' ' << l;
        out << "\n";
    }
}

FiniteGroup group_from_spec(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("empty group spec");
    if (spec[0] == '@') return read_cayley_table_file(spec.substr(1));
    const auto colon = spec.find(':');
    if (colon == std::string::npos) return FiniteGroup::named(spec, std::nullopt);
    const std::string name = spec.substr(0, colon);
    const std::string param = spec.substr(colon + 1);
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(param, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != param.size())
        throw std::invalid_argument("bad group parameter '" + param + "' in spec '" + spec + "'");
    return FiniteGroup::named(name, value);
}

}  // namespace wreath
