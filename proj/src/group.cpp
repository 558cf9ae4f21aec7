#include "group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

namespace rpg {

namespace {

std::vector<int> compute_orders(int n, const std::vector<int>& table) {
    std::vector<int> orders(n, 0);
    for (int x = 0; x < n; ++x) {
        int cur = x, o = 1;
        while (cur != 0) {
            cur = table[size_t(cur) * n + x];
            ++o;
        }
        orders[x] = o;
    }
    return orders;
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::string label,
                         const Caps& caps, bool assoc_by_construction)
    : n_(order), table_(std::move(table)), label_(std::move(label)) {
    if (n_ < 1) throw NotAGroup("order", "group order must be positive");
    if (n_ > caps.max_order)
        throw OrderCapExceeded("order " + std::to_string(n_) + " exceeds cap " +
                               std::to_string(caps.max_order));
    if (table_.size() != size_t(n_) * n_)
        throw NotAGroup("table", "table is not " + std::to_string(n_) + "x" + std::to_string(n_));
    for (int v : table_)
        if (v < 0 || v >= n_)
            throw NotAGroup("table", "table entry out of range: " + std::to_string(v));

    // Latin square: each row and column is a permutation of 0..n-1.
    std::vector<char> seen(n_);
    for (int i = 0; i < n_; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n_; ++j) {
            int v = mul(i, j);
            if (seen[v]) throw NotAGroup("latin_row", "row " + std::to_string(i) + " repeats " +
                                         std::to_string(v), i, j, v);
            seen[v] = 1;
        }
    }
    for (int j = 0; j < n_; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < n_; ++i) {
            int v = mul(i, j);
            if (seen[v]) throw NotAGroup("latin_col", "column " + std::to_string(j) + " repeats " +
                                         std::to_string(v), i, j, v);
            seen[v] = 1;
        }
    }

    // Identity at index 0.
    for (int j = 0; j < n_; ++j) {
        if (mul(0, j) != j) throw NotAGroup("identity", "table[0][j] != j", 0, j, mul(0, j));
        if (mul(j, 0) != j) throw NotAGroup("identity", "table[j][0] != j", j, 0, mul(j, 0));
    }

    // Two-sided inverses.
    inv_.assign(n_, -1);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (mul(i, j) == 0 && mul(j, i) == 0) {
                inv_[i] = j;
                break;
            }
        }
        if (inv_[i] < 0) throw NotAGroup("inverse", "element " + std::to_string(i) +
                                         " has no two-sided inverse", i);
    }

    // Associativity: exhaustive for small n, sampled (10 n^2 triples) above.
    if (!assoc_by_construction) {
        auto check = [&](int a, int b, int c) {
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw NotAGroup("associativity",
                                "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                                    std::to_string(c) + " != a*(b*c)",
                                a, b, c);
        };
        if (n_ <= 128 || caps.force_exhaustive_assoc) {
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b)
                    for (int c = 0; c < n_; ++c) check(a, b, c);
        } else {
            std::mt19937 rng(0x5eed);
            std::uniform_int_distribution<int> d(0, n_ - 1);
            long samples = 10L * n_ * n_;
            for (long s = 0; s < samples; ++s) check(d(rng), d(rng), d(rng));
        }
    }

    orders_ = compute_orders(n_, table_);
    labels_.resize(n_);
    for (int i = 0; i < n_; ++i) labels_[i] = std::to_string(i);
}

int FiniteGroup::power(int x, long k) const {
    int o = orders_[x];
    k %= o;
    if (k < 0) k += o;
    int r = 0;
    for (long i = 0; i < k; ++i) r = mul(r, x);
    return r;
}

bool FiniteGroup::is_abelian() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (mul(i, j) != mul(j, i)) return false;
    return true;
}

bool FiniteGroup::is_cyclic() const {
    for (int o : orders_)
        if (o == n_) return true;
    return false;
}

std::string FiniteGroup::export_table_json() const {
    nlohmann::json j;
    j["label"] = label_;
    j["order"] = n_;
    auto rows = nlohmann::json::array();
    for (int i = 0; i < n_; ++i) {
        auto row = nlohmann::json::array();
        for (int k = 0; k < n_; ++k) row.push_back(mul(i, k));
        rows.push_back(row);
    }
    j["table"] = rows;
    return j.dump();
}

std::string FiniteGroup::export_table_csv() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            if (k) os << ',';
            os << mul(i, k);
        }
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Constructors

namespace {

FiniteGroup make_cyclic(int n, const Caps& caps) {
    if (n < 1) throw InvalidParameter("Z_n needs n >= 1");
    std::vector<int> t(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[size_t(i) * n + j] = (i + j) % n;
    FiniteGroup g(n, std::move(t), "Z" + std::to_string(n), caps, true);
    g.family = GroupFamily::Cyclic;
    g.family_param = n;
    return g;
}

std::string power_label(const std::string& gen, int k) {
    if (k == 0) return "e";
    if (k == 1) return gen;
    return gen + "^" + std::to_string(k);
}

// Elements 0..n-1 are a^i, n..2n-1 are a^i b.
FiniteGroup make_dihedral(int n, const Caps& caps) {
    if (n < 3) throw InvalidParameter("D_{2n} needs n >= 3");
    int N = 2 * n;
    std::vector<int> t(size_t(N) * N);
    auto idx = [&](int pow, int refl) { return refl ? n + pow : pow; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            t[size_t(idx(i, 0)) * N + idx(j, 0)] = idx((i + j) % n, 0);
            t[size_t(idx(i, 0)) * N + idx(j, 1)] = idx((i + j) % n, 1);
            t[size_t(idx(i, 1)) * N + idx(j, 0)] = idx(((i - j) % n + n) % n, 1);
            t[size_t(idx(i, 1)) * N + idx(j, 1)] = idx(((i - j) % n + n) % n, 0);
        }
    FiniteGroup g(N, std::move(t), "D" + std::to_string(N), caps, true);
    g.family = GroupFamily::Dihedral;
    g.family_param = n;
    std::vector<std::string> labels(N);
    for (int i = 0; i < n; ++i) {
        labels[i] = power_label("a", i);
        labels[n + i] = (i == 0) ? "b" : power_label("a", i) + "b";
    }
    g.set_element_labels(std::move(labels));
    return g;
}

// Dicyclic: a^{2n} = e, b^2 = a^n, b a b^{-1} = a^{-1}.
// Elements 0..2n-1 are a^i, 2n..4n-1 are a^i b.
FiniteGroup make_quaternion(int n, const Caps& caps) {
    if (n < 2) throw InvalidParameter("Q_{4n} needs n >= 2");
    int m = 2 * n, N = 4 * n;
    std::vector<int> t(size_t(N) * N);
    auto idx = [&](int pow, int outer) { return outer ? m + pow : pow; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            t[size_t(idx(i, 0)) * N + idx(j, 0)] = idx((i + j) % m, 0);
            t[size_t(idx(i, 0)) * N + idx(j, 1)] = idx((i + j) % m, 1);
            t[size_t(idx(i, 1)) * N + idx(j, 0)] = idx(((i - j) % m + m) % m, 1);
            // (a^i b)(a^j b) = a^{i-j} b^2 = a^{i-j+n}
            t[size_t(idx(i, 1)) * N + idx(j, 1)] = idx(((i - j + n) % m + m) % m, 0);
        }
    FiniteGroup g(N, std::move(t), "Q" + std::to_string(N), caps, true);
    g.family = GroupFamily::Quaternion;
    g.family_param = n;
    std::vector<std::string> labels(N);
    for (int i = 0; i < m; ++i) {
        labels[i] = power_label("a", i);
        labels[m + i] = (i == 0) ? "b" : power_label("a", i) + "b";
    }
    g.set_element_labels(std::move(labels));
    return g;
}

// Semidihedral: a^{4n} = e = b^2, b a b^{-1} = a^{2n-1}.
// Elements 0..4n-1 are a^i, 4n..8n-1 are a^i b.
FiniteGroup make_semidihedral(int n, const Caps& caps) {
    if (n < 2) throw InvalidParameter("SD_{8n} needs n >= 2");
    int m = 4 * n, N = 8 * n;
    int r = 2 * n - 1;  // b a b^{-1} = a^r
    std::vector<int> t(size_t(N) * N);
    auto idx = [&](int pow, int outer) { return outer ? m + pow : pow; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            t[size_t(idx(i, 0)) * N + idx(j, 0)] = idx((i + j) % m, 0);
            t[size_t(idx(i, 0)) * N + idx(j, 1)] = idx((i + j) % m, 1);
            // (a^i b)(a^j) = a^{i + j*r} b
            t[size_t(idx(i, 1)) * N + idx(j, 0)] = idx(int((i + 1L * j * r) % m), 1);
            t[size_t(idx(i, 1)) * N + idx(j, 1)] = idx(int((i + 1L * j * r) % m), 0);
        }
    FiniteGroup g(N, std::move(t), "SD" + std::to_string(N), caps, true);
    g.family = GroupFamily::Semidihedral;
    g.family_param = n;
    std::vector<std::string> labels(N);
    for (int i = 0; i < m; ++i) {
        labels[i] = power_label("a", i);
        labels[m + i] = (i == 0) ? "b" : power_label("a", i) + "b";
    }
    g.set_element_labels(std::move(labels));
    return g;
}

struct SpecToken {
    char kind;  // 'Z', 'D', 'Q', 'S' (SD), 'E'
    int a = 0, b = 0;
};

std::vector<SpecToken> tokenize_spec(const std::string& spec) {
    std::vector<SpecToken> out;
    size_t pos = 0;
    while (pos < spec.size()) {
        SpecToken tok{};
        if (spec.compare(pos, 2, "SD") == 0) {
            tok.kind = 'S';
            pos += 2;
        } else if (spec[pos] == 'Z' || spec[pos] == 'D' || spec[pos] == 'Q' || spec[pos] == 'E') {
            tok.kind = spec[pos];
            pos += 1;
        } else {
            throw MalformedSpec("unrecognized group family at '" + spec.substr(pos) + "'");
        }
        size_t start = pos;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
        if (pos == start) throw MalformedSpec("missing order in spec '" + spec + "'");
        tok.a = std::stoi(spec.substr(start, pos - start));
        if (tok.kind == 'E') {
            if (pos >= spec.size() || spec[pos] != '^')
                throw MalformedSpec("E<p>^<k> requires an exponent");
            ++pos;
            start = pos;
            while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
            if (pos == start) throw MalformedSpec("missing exponent in spec '" + spec + "'");
            tok.b = std::stoi(spec.substr(start, pos - start));
        }
        out.push_back(tok);
        if (pos < spec.size()) {
            if (spec[pos] != 'x')
                throw MalformedSpec("expected 'x' between factors in '" + spec + "'");
            ++pos;
            if (pos == spec.size()) throw MalformedSpec("trailing 'x' in '" + spec + "'");
        }
    }
    if (out.empty()) throw MalformedSpec("empty group spec");
    return out;
}

FiniteGroup build_token(const SpecToken& tok, const Caps& caps) {
    switch (tok.kind) {
        case 'Z':
            return make_cyclic(tok.a, caps);
        case 'D':
            if (tok.a % 2 != 0) throw MalformedSpec("D<m> requires even m");
            return make_dihedral(tok.a / 2, caps);
        case 'Q':
            if (tok.a % 4 != 0) throw MalformedSpec("Q<m> requires m divisible by 4");
            return make_quaternion(tok.a / 4, caps);
        case 'S':
            if (tok.a % 8 != 0) throw MalformedSpec("SD<m> requires m divisible by 8");
            return make_semidihedral(tok.a / 8, caps);
        case 'E': {
            if (!is_prime(tok.a)) throw InvalidParameter("E<p>^<k> needs prime p");
            if (tok.b < 1) throw InvalidParameter("E<p>^<k> needs k >= 1");
            FiniteGroup g = make_cyclic(tok.a, caps);
            for (int i = 1; i < tok.b; ++i) g = direct_product(g, make_cyclic(tok.a, caps), caps);
            g.family = GroupFamily::ElementaryAbelian;
            g.family_param = tok.a;
            return g;
        }
        default:
            throw MalformedSpec("bad spec token");
    }
}

}  // namespace

FiniteGroup build_group(const std::string& spec, const Caps& caps) {
    auto toks = tokenize_spec(spec);
    FiniteGroup g = build_token(toks[0], caps);
    for (size_t i = 1; i < toks.size(); ++i)
        g = direct_product(g, build_token(toks[i], caps), caps);
    return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Caps& caps) {
    long N = 1L * a.order() * b.order();
    if (N > caps.max_order)
        throw OrderCapExceeded("product order " + std::to_string(N) + " exceeds cap " +
                               std::to_string(caps.max_order));
    int n = int(N), bo = b.order();
    std::vector<int> t(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int gi = i / bo, hi = i % bo, gj = j / bo, hj = j % bo;
            t[size_t(i) * n + j] = a.mul(gi, gj) * bo + b.mul(hi, hj);
        }
    FiniteGroup g(n, std::move(t), a.label() + "x" + b.label(), caps, true);
    g.family = GroupFamily::Product;
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i)
        labels[i] = "(" + a.element_labels()[i / bo] + "," + b.element_labels()[i % bo] + ")";
    g.set_element_labels(std::move(labels));
    return g;
}

FiniteGroup from_cayley_table_json(const std::string& text, const Caps& caps) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("order") || !j.contains("table"))
        throw ParseError("table document needs \"order\" and \"table\"");
    int n = j["order"].get<int>();
    std::string label = j.value("label", "imported");
    std::vector<int> t;
    t.reserve(size_t(n) * n);
    if (!j["table"].is_array() || int(j["table"].size()) != n)
        throw ParseError("\"table\" must have exactly " + std::to_string(n) + " rows");
    for (const auto& row : j["table"]) {
        if (!row.is_array() || int(row.size()) != n)
            throw ParseError("each table row must have " + std::to_string(n) + " entries");
        for (const auto& v : row) t.push_back(v.get<int>());
    }
    return FiniteGroup(n, std::move(t), label, caps);
}

FiniteGroup from_cayley_table_csv(const std::string& text, const std::string& label,
                                  const Caps& caps) {
    std::vector<int> t;
    int n = -1;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string cell;
        int cols = 0;
        while (std::getline(ls, cell, ',')) {
            try {
                t.push_back(std::stoi(cell));
            } catch (const std::exception&) {
                throw ParseError("bad CSV cell '" + cell + "'");
            }
            ++cols;
        }
        if (n == -1) n = cols;
        else if (cols != n) throw ParseError("ragged CSV rows");
    }
    if (n <= 0) throw ParseError("empty CSV table");
    if (t.size() != size_t(n) * n) throw ParseError("CSV table is not square");
    return FiniteGroup(n, std::move(t), label, caps);
}

// ---------------------------------------------------------------------------
// Lattice and arithmetic

CyclicSubgroupLattice compute_lattice(const FiniteGroup& g) {
    int n = g.order();
    CyclicSubgroupLattice lat;
    lat.gen_subgroup.resize(n);
    lat.gen_mask.assign(n, Bitset(n));
    lat.orders.resize(n);
    for (int x = 0; x < n; ++x) {
        int cur = 0;
        do {
            lat.gen_mask[x].set(cur);
            cur = g.mul(cur, x);
        } while (cur != 0);
        lat.gen_subgroup[x] = lat.gen_mask[x].to_vector();
        lat.orders[x] = int(lat.gen_subgroup[x].size());
    }

    // Generator-equivalence classes: group equal subgroup sets.
    lat.class_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (lat.class_of[x] != -1) continue;
        int c = int(lat.classes.size());
        lat.classes.push_back({});
        for (int y = x; y < n; ++y)
            if (lat.class_of[y] == -1 && lat.gen_mask[y] == lat.gen_mask[x]) {
                lat.class_of[y] = c;
                lat.classes[c].push_back(y);
            }
    }

    // Maximal cyclic subgroups: pairwise containment filter over the
    // distinct subgroup sets (one representative per class).
    std::vector<int> reps;
    for (const auto& cls : lat.classes) reps.push_back(cls[0]);
    for (int r : reps) {
        bool maximal = true;
        for (int s : reps) {
            if (s == r) continue;
            if (lat.orders[r] < lat.orders[s] && lat.gen_mask[r].is_subset_of(lat.gen_mask[s])) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            lat.maximal_cyclic.push_back(lat.gen_mask[r]);
            lat.maximal_cyclic_order.push_back(lat.orders[r]);
        }
    }
    return lat;
}

std::map<int, int> CyclicSubgroupLattice::prime_maximal_counts() const {
    std::map<int, int> m;
    for (int o : maximal_cyclic_order)
        if (is_prime(o)) ++m[o];
    return m;
}

ElementOrderProfile order_profile(const FiniteGroup& g) {
    ElementOrderProfile p;
    std::vector<int> orders = g.element_orders();
    p.pi_e = orders;
    std::sort(p.pi_e.begin(), p.pi_e.end());
    p.pi_e.erase(std::unique(p.pi_e.begin(), p.pi_e.end()), p.pi_e.end());
    p.omega_max = 0;
    p.witness = 0;
    for (int x = 0; x < g.order(); ++x) {
        int w = big_omega(orders[x]);
        if (w > p.omega_max) {
            p.omega_max = w;
            p.witness = x;
        }
    }
    return p;
}

int big_omega(long n) {
    int c = 0;
    for (long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            n /= p;
            ++c;
        }
    if (n > 1) ++c;
    return c;
}

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    if (n > 1) r -= r / n;
    return r;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> f;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.emplace_back(p, e);
        }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

bool is_nilpotent(const FiniteGroup& g) {
    // Upper central series from the Cayley table.
    int n = g.order();
    Bitset z(n);
    z.set(0);
    int size = 1;
    while (true) {
        Bitset next(n);
        for (int x = 0; x < n; ++x) {
            bool central_mod_z = true;
            for (int h = 0; h < n && central_mod_z; ++h) {
                int comm = g.mul(g.mul(x, h), g.mul(g.inverse(x), g.inverse(h)));
                if (!z.test(comm)) central_mod_z = false;
            }
            if (central_mod_z) next.set(x);
        }
        int next_size = next.count();
        if (next_size == n) return true;
        if (next_size == size) return false;
        z = next;
        size = next_size;
    }
}

std::map<int, SylowClass> sylow_structure(const FiniteGroup& g) {
    if (!is_nilpotent(g)) throw NotNilpotent("sylow_structure requires a nilpotent group");
    std::map<int, SylowClass> out;
    for (auto [p, e] : factorize(g.order())) {
        // In a nilpotent group the p-power-order elements form the Sylow p-subgroup.
        long size = 1;
        for (int i = 0; i < e; ++i) size *= p;
        bool cyclic = false;
        int involutions = 0;
        for (int x = 0; x < g.order(); ++x) {
            int o = g.element_order(x);
            if (o == size) cyclic = true;
            if (p == 2 && o == 2) ++involutions;
        }
        SylowClass cls;
        if (cyclic) {
            cls = SylowClass::Cyclic;
        } else if (p == 2 && involutions == 1) {
            // A 2-group with a unique involution is cyclic or generalized quaternion.
            cls = SylowClass::GeneralizedQuaternion;
        } else {
            cls = SylowClass::Other;
        }
        out[int(p)] = cls;
    }
    return out;
}

}  // namespace rpg
