#include "rdcert/repr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace rdcert::repr {

using arith::mul_mod;
using arith::pow_mod;
using cyclo::Cyclotomic;

Perm::Perm(int n) : img_(static_cast<std::size_t>(n)) {
    std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> hit(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= degree() || hit[static_cast<std::size_t>(v)])
            throw std::domain_error("Perm: image vector is not a permutation");
        hit[static_cast<std::size_t>(v)] = true;
    }
}

Perm Perm::then(const Perm& next) const {
    if (degree() != next.degree()) throw std::domain_error("Perm: degree mismatch");
    std::vector<int> img(img_.size());
    for (int i = 0; i < degree(); ++i) img[static_cast<std::size_t>(i)] = next.image(image(i));
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> img(img_.size());
    for (int i = 0; i < degree(); ++i) img[static_cast<std::size_t>(image(i))] = i;
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (image(i) != i) return false;
    return true;
}

std::uint64_t Perm::order() const {
    std::uint64_t ord = 1;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::uint64_t len = 0;
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = image(j);
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::vector<Perm> parse_generators(const std::string& text, int& moved_points) {
    std::vector<std::vector<std::vector<int>>> gen_cycles; // per generator, per cycle, 0-based points
    std::vector<std::vector<int>> current;
    std::vector<int> cycle;
    bool in_cycle = false;
    int max_point = moved_points;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '(') {
            if (in_cycle) throw ParseError("generator parse: nested '('");
            in_cycle = true;
            cycle.clear();
            ++i;
        } else if (c == ')') {
            if (!in_cycle) throw ParseError("generator parse: unmatched ')'");
            in_cycle = false;
            current.push_back(cycle);
            ++i;
        } else if (c == ',') {
            if (in_cycle) throw ParseError("generator parse: ',' inside a cycle");
            if (current.empty()) throw ParseError("generator parse: empty generator");
            gen_cycles.push_back(current);
            current.clear();
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (!in_cycle) throw ParseError("generator parse: point outside a cycle");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            if (v < 1) throw ParseError("generator parse: points are 1-based");
            max_point = std::max(max_point, v);
            for (int q : cycle)
                if (q == v - 1) throw ParseError("generator parse: repeated point in cycle");
            cycle.push_back(v - 1);
        } else {
            throw ParseError(std::string("generator parse: unexpected character '") + c + "'");
        }
    }
    if (in_cycle) throw ParseError("generator parse: unterminated cycle");
    if (!current.empty()) gen_cycles.push_back(current);
    moved_points = std::max(max_point, 1);

    std::vector<Perm> gens;
    for (const auto& cycles : gen_cycles) {
        Perm g(moved_points);
        for (const auto& cyc : cycles) {
            if (cyc.size() < 2) continue;
            std::vector<int> img(static_cast<std::size_t>(moved_points));
            std::iota(img.begin(), img.end(), 0);
            for (std::size_t t = 0; t < cyc.size(); ++t)
                img[static_cast<std::size_t>(cyc[t])] = cyc[(t + 1) % cyc.size()];
            g = g.then(Perm(std::move(img)));
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

std::string cycles_string(const Perm& p) {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[static_cast<std::size_t>(i)] || p.image(i) == i) continue;
        std::vector<int> cyc;
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            cyc.push_back(j + 1);
            j = p.image(j);
        }
        cycles.push_back(std::move(cyc));
    }
    if (cycles.empty()) return "()";
    std::ostringstream os;
    for (const auto& cyc : cycles) {
        os << '(';
        for (std::size_t t = 0; t < cyc.size(); ++t) {
            if (t) os << ' ';
            os << cyc[t];
        }
        os << ')';
    }
    return os.str();
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = v.size();
        for (int x : v) h = h * 1000003u + static_cast<std::size_t>(x) + 0x9e3779b9u;
        return h;
    }
};

using ElementIndex = std::unordered_map<std::vector<int>, int, VecHash>;

} // namespace

int PermGroup::element_index(const Perm& p) const {
    auto lo = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (lo != elements_.end() && *lo == p) return static_cast<int>(lo - elements_.begin());
    return -1;
}

const std::vector<int>& PermGroup::class_members(int class_index) const {
    return members_[static_cast<std::size_t>(class_index)];
}

int PermGroup::inverse_class(int class_index) const {
    return inverse_class_[static_cast<std::size_t>(class_index)];
}

int PermGroup::multiply(int a, int b) const {
    Perm prod = elements_[static_cast<std::size_t>(a)].then(elements_[static_cast<std::size_t>(b)]);
    int idx = element_index(prod);
    if (idx < 0) throw std::logic_error("PermGroup::multiply: product escaped the group");
    return idx;
}

int PermGroup::inverse_element(int e) const {
    return inverse_element_[static_cast<std::size_t>(e)];
}

PermGroupPtr group_from_generators(int moved_points, std::vector<Perm> generators,
                                   std::uint64_t order_cap) {
    if (moved_points < 1) throw std::domain_error("group_from_generators: need at least one point");
    for (auto& g : generators)
        if (g.degree() != moved_points)
            throw std::domain_error("group_from_generators: generator degree mismatch");

    auto G = std::make_shared<PermGroup>();
    G->degree_ = moved_points;
    G->generators_ = generators;

    // closure
    std::set<Perm> elems;
    std::vector<Perm> frontier{Perm(moved_points)};
    elems.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& x : frontier) {
            for (const auto& g : generators) {
                Perm y = x.then(g);
                if (elems.insert(y).second) {
                    if (elems.size() > order_cap)
                        throw SizeError("group_from_generators: order exceeds cap");
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    G->elements_.assign(elems.begin(), elems.end()); // sorted; identity is index 0

    const auto n = static_cast<int>(G->elements_.size());
    G->inverse_element_.resize(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) {
        int inv = G->element_index(G->elements_[static_cast<std::size_t>(e)].inverse());
        if (inv < 0) throw std::logic_error("group_from_generators: inverse escaped the group");
        G->inverse_element_[static_cast<std::size_t>(e)] = inv;
    }

    // conjugacy classes as orbits of conjugation by the generators
    G->class_of_.assign(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> raw_members;
    for (int e = 0; e < n; ++e) {
        if (G->class_of_[static_cast<std::size_t>(e)] >= 0) continue;
        int cls = static_cast<int>(raw_members.size());
        std::vector<int> orbit{e};
        G->class_of_[static_cast<std::size_t>(e)] = cls;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            const Perm& x = G->elements_[static_cast<std::size_t>(orbit[head])];
            for (const auto& g : G->generators_) {
                Perm y = g.inverse().then(x).then(g);
                int idx = G->element_index(y);
                if (G->class_of_[static_cast<std::size_t>(idx)] < 0) {
                    G->class_of_[static_cast<std::size_t>(idx)] = cls;
                    orbit.push_back(idx);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        raw_members.push_back(std::move(orbit));
    }

    // canonical order: identity first via (size, element order, lex-least representative)
    std::vector<int> perm_order(raw_members.size());
    std::iota(perm_order.begin(), perm_order.end(), 0);
    auto class_key = [&](int c) {
        const auto& mem = raw_members[static_cast<std::size_t>(c)];
        return std::tuple<std::uint64_t, std::uint64_t, const Perm&>(
            mem.size(), G->elements_[static_cast<std::size_t>(mem.front())].order(),
            G->elements_[static_cast<std::size_t>(mem.front())]);
    };
    std::sort(perm_order.begin(), perm_order.end(),
              [&](int a, int b) { return class_key(a) < class_key(b); });

    G->exponent_ = 1;
    for (std::size_t c = 0; c < perm_order.size(); ++c) {
        const auto& mem = raw_members[static_cast<std::size_t>(perm_order[c])];
        ConjugacyClass cc;
        cc.representative = mem.front();
        cc.size = mem.size();
        cc.element_order = G->elements_[static_cast<std::size_t>(mem.front())].order();
        G->exponent_ = std::lcm(G->exponent_, cc.element_order);
        G->classes_.push_back(cc);
        G->members_.push_back(mem);
        for (int e : mem) G->class_of_[static_cast<std::size_t>(e)] = static_cast<int>(c);
    }

    G->inverse_class_.resize(G->classes_.size());
    for (std::size_t c = 0; c < G->classes_.size(); ++c) {
        int inv = G->inverse_element_[static_cast<std::size_t>(G->classes_[c].representative)];
        G->inverse_class_[c] = G->class_of_[static_cast<std::size_t>(inv)];
    }

    // canonical key for caching and cross-instance identity
    std::vector<std::string> gen_strings;
    for (const auto& g : G->generators_) gen_strings.push_back(cycles_string(g));
    std::sort(gen_strings.begin(), gen_strings.end());
    std::ostringstream key;
    key << "n" << moved_points << ";g[";
    for (std::size_t i = 0; i < gen_strings.size(); ++i) key << (i ? "|" : "") << gen_strings[i];
    key << "];o" << G->order() << ";c[";
    for (std::size_t c = 0; c < G->classes_.size(); ++c)
        key << (c ? "," : "") << G->classes_[c].size << ":" << G->classes_[c].element_order;
    key << "]";
    G->key_ = key.str();
    return G;
}

bool Subgroup::contains(int e) const {
    return std::binary_search(elements.begin(), elements.end(), e);
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
    return std::includes(elements.begin(), elements.end(), other.elements.begin(),
                         other.elements.end());
}

Subgroup subgroup_closure(const PermGroupPtr& group, const std::vector<int>& generator_indices) {
    std::vector<bool> in(static_cast<std::size_t>(group->order()), false);
    std::vector<int> elems{0};
    in[0] = true;
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (int g : generator_indices) {
            int y = group->multiply(elems[head], g);
            if (!in[static_cast<std::size_t>(y)]) {
                in[static_cast<std::size_t>(y)] = true;
                elems.push_back(y);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return Subgroup{group, std::move(elems), generator_indices};
}

Subgroup trivial_subgroup(const PermGroupPtr& group) {
    return Subgroup{group, {0}, {}};
}

// ---------------------------------------------------------------------------
// Dixon-Schneider
// ---------------------------------------------------------------------------

namespace {

struct Fp {
    std::uint64_t p;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b % p) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_mod(a, b, p); }
    std::uint64_t inv(std::uint64_t a) const { return pow_mod(a, p - 2, p); }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
};

using Mat = std::vector<std::vector<std::uint64_t>>;

// coordinates X with B*X = U, where B's columns (basis, k x m) are independent
// and U's columns (k x t) lie in their span
Mat solve_in_basis(const Mat& basis_cols, const Mat& target_cols, Fp F) {
    std::size_t k = basis_cols.front().size();
    std::size_t m = basis_cols.size();
    std::size_t t = target_cols.size();
    Mat aug(k, std::vector<std::uint64_t>(m + t, 0));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < k; ++i) aug[i][j] = basis_cols[j][i];
    for (std::size_t j = 0; j < t; ++j)
        for (std::size_t i = 0; i < k; ++i) aug[i][m + j] = target_cols[j][i];

    std::vector<int> pivot_row_of_col(m, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < k; ++col) {
        std::size_t pr = row;
        while (pr < k && aug[pr][col] == 0) ++pr;
        if (pr == k) continue;
        std::swap(aug[pr], aug[row]);
        std::uint64_t ipv = F.inv(aug[row][col]);
        for (auto& v : aug[row]) v = F.mul(v, ipv);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            std::uint64_t f = aug[r][col];
            for (std::size_t c2 = col; c2 < m + t; ++c2)
                aug[r][c2] = F.sub(aug[r][c2], F.mul(f, aug[row][c2]));
        }
        pivot_row_of_col[col] = static_cast<int>(row);
        ++row;
    }
    Mat X(t, std::vector<std::uint64_t>(m, 0));
    for (std::size_t col = 0; col < m; ++col) {
        if (pivot_row_of_col[col] < 0) throw TableError("eigen split: dependent basis");
        for (std::size_t j = 0; j < t; ++j)
            X[j][col] = aug[static_cast<std::size_t>(pivot_row_of_col[col])][m + j];
    }
    return X;
}

// basis of the kernel of a square matrix
Mat nullspace(Mat C, Fp F) {
    std::size_t m = C.size();
    std::vector<int> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < m; ++col) {
        std::size_t pr = row;
        while (pr < m && C[pr][col] == 0) ++pr;
        if (pr == m) continue;
        std::swap(C[pr], C[row]);
        std::uint64_t ipv = F.inv(C[row][col]);
        for (auto& v : C[row]) v = F.mul(v, ipv);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || C[r][col] == 0) continue;
            std::uint64_t f = C[r][col];
            for (std::size_t c2 = 0; c2 < m; ++c2) C[r][c2] = F.sub(C[r][c2], F.mul(f, C[row][c2]));
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    std::vector<bool> is_pivot(m, false);
    for (int c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = true;
    Mat basis;
    for (std::size_t free_col = 0; free_col < m; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint64_t> v(m, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[static_cast<std::size_t>(pivot_col_of_row[r])] = F.neg(C[r][free_col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// characteristic polynomial, low degree first (Hessenberg reduction)
std::vector<std::uint64_t> char_poly(Mat H, Fp F) {
    std::size_t m = H.size();
    for (std::size_t j = 0; j + 2 < m; ++j) {
        std::size_t pr = j + 1;
        while (pr < m && H[pr][j] == 0) ++pr;
        if (pr == m) continue;
        if (pr != j + 1) {
            std::swap(H[pr], H[j + 1]);
            for (std::size_t r = 0; r < m; ++r) std::swap(H[r][pr], H[r][j + 1]);
        }
        std::uint64_t ipv = F.inv(H[j + 1][j]);
        for (std::size_t r = j + 2; r < m; ++r) {
            if (H[r][j] == 0) continue;
            std::uint64_t f = F.mul(H[r][j], ipv);
            for (std::size_t c = 0; c < m; ++c) H[r][c] = F.sub(H[r][c], F.mul(f, H[j + 1][c]));
            for (std::size_t r2 = 0; r2 < m; ++r2)
                H[r2][j + 1] = F.add(H[r2][j + 1], F.mul(f, H[r2][r]));
        }
    }
    std::vector<std::vector<std::uint64_t>> P(m + 1);
    P[0] = {1};
    for (std::size_t i = 1; i <= m; ++i) {
        // P_i = (x - H[i-1][i-1]) P_{i-1} - sum over lower rows with subdiagonal products
        const auto& prev = P[i - 1];
        std::vector<std::uint64_t> cur(i + 1, 0);
        for (std::size_t c = 0; c < prev.size(); ++c) {
            cur[c + 1] = F.add(cur[c + 1], prev[c]);
            cur[c] = F.sub(cur[c], F.mul(H[i - 1][i - 1], prev[c]));
        }
        std::uint64_t prod = 1;
        for (std::size_t r = i - 1; r-- > 0;) {
            prod = F.mul(prod, H[r + 1][r]);
            std::uint64_t coef = F.mul(H[r][i - 1], prod);
            if (coef == 0) continue;
            for (std::size_t c = 0; c < P[r].size(); ++c)
                cur[c] = F.sub(cur[c], F.mul(coef, P[r][c]));
        }
        P[i] = std::move(cur);
    }
    return P[m];
}

std::uint64_t eval_poly(const std::vector<std::uint64_t>& poly, std::uint64_t x, Fp F) {
    std::uint64_t v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = F.add(F.mul(v, x), poly[i]);
    return v;
}

std::uint64_t pick_field_prime(std::uint64_t exponent, std::uint64_t order) {
    double lo = 2.0 * std::sqrt(static_cast<double>(order));
    std::uint64_t p = exponent + 1;
    while (p <= static_cast<std::uint64_t>(lo) || !arith::is_prime(p) || (p - 1) % exponent != 0)
        ++p;
    return p;
}

std::uint64_t primitive_root_mod(std::uint64_t p) {
    auto fs = arith::factor(p - 1).factors();
    for (std::uint64_t w = 2;; ++w) {
        bool ok = true;
        for (const auto& q : fs) {
            if (pow_mod(w, (p - 1) / q.prime, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return w;
    }
}

} // namespace

const Cyclotomic& CharacterTable::value(int row, int cls) const {
    return values_[static_cast<std::size_t>(row)][static_cast<std::size_t>(cls)];
}

CharacterTablePtr character_table(const PermGroupPtr& group, std::uint64_t order_cap,
                                  std::uint64_t class_cap) {
    const std::uint64_t n = group->order();
    const std::size_t k = group->classes().size();
    if (n > order_cap) throw SizeError("character_table: group order exceeds cap");
    if (k > class_cap) throw SizeError("character_table: class count exceeds cap");
    const std::uint64_t e = group->exponent();
    Fp F{pick_field_prime(e, n)};
    const std::uint64_t p = F.p;
    const std::uint64_t z = pow_mod(primitive_root_mod(p), (p - 1) / e, p);

    // class sizes, power map, structure matrices
    std::vector<std::uint64_t> h(k);
    for (std::size_t c = 0; c < k; ++c) h[c] = group->classes()[c].size;
    std::vector<std::vector<int>> pow_class(k, std::vector<int>(e));
    for (std::size_t c = 0; c < k; ++c) {
        int cur = 0;
        int rep = group->classes()[c].representative;
        for (std::uint64_t s = 0; s < e; ++s) {
            pow_class[c][s] = group->class_of(cur);
            cur = group->multiply(cur, rep);
        }
    }
    // A[i][j][l] = #{x in C_i : x^{-1} rep_l in C_j}
    std::vector<Mat> A(k, Mat(k, std::vector<std::uint64_t>(k, 0)));
    for (std::size_t l = 0; l < k; ++l) {
        int rep = group->classes()[l].representative;
        for (std::size_t i = 0; i < k; ++i) {
            for (int x : group->class_members(static_cast<int>(i))) {
                int y = group->multiply(group->inverse_element(x), rep);
                A[i][static_cast<std::size_t>(group->class_of(y))][l] += 1;
            }
        }
    }
    for (auto& Ai : A)
        for (auto& row : Ai)
            for (auto& v : row) v %= p;

    // split the common eigenspaces
    std::vector<Mat> subspaces;
    {
        Mat full(k, std::vector<std::uint64_t>(k, 0));
        for (std::size_t i = 0; i < k; ++i) full[i][i] = 1;
        subspaces.push_back(std::move(full));
    }
    for (std::size_t i = 1; i < k; ++i) {
        bool all_split = true;
        for (const auto& W : subspaces)
            if (W.size() > 1) all_split = false;
        if (all_split) break;

        std::vector<Mat> next;
        for (auto& W : subspaces) {
            if (W.size() == 1) {
                next.push_back(std::move(W));
                continue;
            }
            // restrict A_i to W (W is invariant: the class matrices commute)
            Mat images;
            for (const auto& w : W) {
                std::vector<std::uint64_t> u(k, 0);
                for (std::size_t r = 0; r < k; ++r) {
                    std::uint64_t s = 0;
                    for (std::size_t c = 0; c < k; ++c) s = F.add(s, F.mul(A[i][r][c], w[c]));
                    u[r] = s;
                }
                images.push_back(std::move(u));
            }
            Mat coords = solve_in_basis(W, images, F); // images[j] = sum coords[j][b] * W[b]
            std::size_t m = W.size();
            Mat C(m, std::vector<std::uint64_t>(m, 0));
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t b = 0; b < m; ++b) C[b][j] = coords[j][b];
            auto cp = char_poly(C, F);
            std::size_t found = 0;
            for (std::uint64_t lam = 0; lam < p; ++lam) {
                if (eval_poly(cp, lam, F) != 0) continue;
                Mat shifted = C;
                for (std::size_t d = 0; d < m; ++d) shifted[d][d] = F.sub(shifted[d][d], lam);
                Mat kernel = nullspace(std::move(shifted), F);
                if (kernel.empty()) continue;
                Mat ambient;
                for (const auto& coeffs : kernel) {
                    std::vector<std::uint64_t> v(k, 0);
                    for (std::size_t b = 0; b < m; ++b) {
                        if (coeffs[b] == 0) continue;
                        for (std::size_t r = 0; r < k; ++r)
                            v[r] = F.add(v[r], F.mul(coeffs[b], W[b][r]));
                    }
                    ambient.push_back(std::move(v));
                }
                found += ambient.size();
                next.push_back(std::move(ambient));
            }
            if (found != m) throw TableError("character_table: eigenspace split incomplete");
        }
        subspaces = std::move(next);
    }
    for (const auto& W : subspaces)
        if (W.size() != 1)
            throw TableError("character_table: class matrices failed to separate characters");
    if (subspaces.size() != k) throw TableError("character_table: wrong number of eigenvectors");

    // degrees and character values mod p
    std::vector<int> inv_class(k);
    for (std::size_t c = 0; c < k; ++c) inv_class[c] = group->inverse_class(static_cast<int>(c));
    std::vector<std::uint64_t> degs(k);
    std::vector<std::vector<std::uint64_t>> chi_mod_p(k, std::vector<std::uint64_t>(k));
    std::uint64_t sqrt_n = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))) + 1;
    for (std::size_t t = 0; t < k; ++t) {
        auto v = subspaces[t][0];
        if (v[0] == 0) throw TableError("character_table: eigenvector vanishes at the identity class");
        std::uint64_t scale = F.inv(v[0]);
        for (auto& x : v) x = F.mul(x, scale);
        std::uint64_t c = 0;
        for (std::size_t j = 0; j < k; ++j)
            c = F.add(c, F.mul(F.mul(v[j], v[static_cast<std::size_t>(inv_class[j])]), F.inv(h[j] % p)));
        if (c == 0) throw TableError("character_table: degree norm vanished");
        std::uint64_t d2 = F.mul(n % p, F.inv(c));
        std::uint64_t d = 0;
        for (std::uint64_t x = 1; x <= sqrt_n; ++x) {
            if (F.mul(x, x) == d2) {
                d = x;
                break;
            }
        }
        if (d == 0) throw TableError("character_table: degree is not a small square root");
        degs[t] = d;
        for (std::size_t j = 0; j < k; ++j)
            chi_mod_p[t][j] = F.mul(F.mul(d, v[j]), F.inv(h[j] % p));
    }

    // lift to exact cyclotomic values by discrete Fourier inversion mod p
    std::vector<std::uint64_t> zpow(e);
    zpow[0] = 1;
    for (std::uint64_t s = 1; s < e; ++s) zpow[s] = F.mul(zpow[s - 1], z);
    std::uint64_t e_inv = F.inv(e % p);
    std::vector<std::vector<Cyclotomic>> values(k);
    for (std::size_t t = 0; t < k; ++t) {
        values[t].reserve(k);
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<long long> mult(e, 0);
            std::uint64_t total = 0;
            for (std::uint64_t l = 0; l < e; ++l) {
                std::uint64_t s_sum = 0;
                for (std::uint64_t s = 0; s < e; ++s) {
                    std::uint64_t theta = chi_mod_p[t][static_cast<std::size_t>(pow_class[j][s])];
                    s_sum = F.add(s_sum, F.mul(theta, zpow[(e - (l * s) % e) % e]));
                }
                std::uint64_t m_l = F.mul(e_inv, s_sum);
                mult[l] = static_cast<long long>(m_l);
                total += m_l;
            }
            if (total != degs[t]) throw TableError("character_table: eigenvalue multiplicities do not sum to the degree");
            values[t].push_back(Cyclotomic::from_power_basis(static_cast<std::uint32_t>(e), std::move(mult)));
        }
    }

    // canonical row order
    std::vector<std::size_t> order_idx(k);
    std::iota(order_idx.begin(), order_idx.end(), 0);
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
        if (degs[a] != degs[b]) return degs[a] < degs[b];
        for (std::size_t j = 0; j < k; ++j) {
            if (!(values[a][j] == values[b][j])) return values[a][j].coeffs() < values[b][j].coeffs();
        }
        return false;
    });

    auto table = std::make_shared<CharacterTable>();
    table->group_ = group;
    table->value_order_ = static_cast<std::uint32_t>(e);
    for (std::size_t t : order_idx) {
        table->degrees_.push_back(degs[t]);
        table->values_.push_back(std::move(values[t]));
    }

    // certification gates: a table failing any of these is never returned
    std::uint64_t degree_sq_sum = 0;
    for (std::uint64_t d : table->degrees_) degree_sq_sum += d * d;
    if (degree_sq_sum != n) throw TableError("character_table: sum of squared degrees != |G|");
    for (std::size_t t = 0; t < k; ++t) {
        if (!table->values_[t][0].is_integer() ||
            table->values_[t][0].to_integer() != static_cast<long long>(table->degrees_[t]))
            throw TableError("character_table: identity value != degree");
    }
    for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t u = t; u < k; ++u) {
            Cyclotomic s(static_cast<std::uint32_t>(e));
            for (std::size_t j = 0; j < k; ++j)
                s += table->values_[t][j] * table->values_[u][j].conjugate() * static_cast<long long>(h[j]);
            long long expect = (t == u) ? static_cast<long long>(n) : 0;
            if (!s.is_integer() || s.to_integer() != expect)
                throw TableError("character_table: row orthogonality failed");
        }
    }
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t l = j; l < k; ++l) {
            Cyclotomic s(static_cast<std::uint32_t>(e));
            for (std::size_t t = 0; t < k; ++t)
                s += table->values_[t][j] * table->values_[t][l].conjugate();
            long long expect = (j == l) ? static_cast<long long>(n / h[j]) : 0;
            if (!s.is_integer() || s.to_integer() != expect)
                throw TableError("character_table: column orthogonality failed");
        }
    }
    return table;
}

std::uint64_t max_irr_degree(const CharacterTable& table) {
    return *std::max_element(table.degrees().begin(), table.degrees().end());
}

std::uint64_t max_irr_degree(const PermGroupPtr& group) {
    return max_irr_degree(*character_table(group));
}

std::uint64_t min_abelian_subgroup_index(const PermGroupPtr& group, std::uint64_t order_cap) {
    const std::uint64_t n = group->order();
    if (n > order_cap)
        throw SizeError(
            "min_abelian_subgroup_index: group order exceeds the exhaustive-enumeration cap; "
            "raise the cap or fall back to sampling abelian subgroups");
    std::uint64_t best = 1;
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> queue{trivial_subgroup(group)};
    seen.insert(queue.front().elements);
    while (!queue.empty()) {
        Subgroup H = std::move(queue.back());
        queue.pop_back();
        best = std::max(best, H.order());
        for (int g = 1; g < static_cast<int>(n); ++g) {
            if (H.contains(g)) continue;
            bool commutes = true;
            for (int x : H.generators) {
                if (group->multiply(g, x) != group->multiply(x, g)) {
                    commutes = false;
                    break;
                }
            }
            if (!commutes) continue;
            auto gens = H.generators;
            gens.push_back(g);
            Subgroup ext = subgroup_closure(group, gens);
            if (seen.insert(ext.elements).second) queue.push_back(std::move(ext));
        }
    }
    return n / best;
}

namespace {

void require_same_group(const TableRow& a, const TableRow& b) {
    if (a.table->group()->canonical_key() != b.table->group()->canonical_key())
        throw std::domain_error("table rows belong to different groups");
}

void require_same_group(const TableRow& row, const Subgroup& H) {
    if (row.table->group()->canonical_key() != H.group->canonical_key())
        throw std::domain_error("subgroup belongs to a different group");
}

// (1/|H|) sum_{h in H} phi(h) for a class function given per class
std::uint64_t fixed_dim_of_values(const std::vector<Cyclotomic>& values, const Subgroup& H,
                                  const PermGroup& G, std::uint32_t order) {
    Cyclotomic sum(order);
    for (int e : H.elements) sum += values[static_cast<std::size_t>(G.class_of(e))];
    long long dim = sum.divided_by(static_cast<long long>(H.order())).to_integer();
    if (dim < 0) throw std::logic_error("fixed subspace dimension is negative");
    return static_cast<std::uint64_t>(dim);
}

std::vector<Cyclotomic> row_values(const TableRow& row) {
    std::vector<Cyclotomic> vals;
    const auto k = static_cast<std::size_t>(row.table->group()->classes().size());
    vals.reserve(k);
    for (std::size_t j = 0; j < k; ++j) vals.push_back(row.value(static_cast<int>(j)));
    return vals;
}

BigRat conductor_exponent_of_values(const std::vector<Cyclotomic>& values, std::uint64_t deg,
                                    const RamificationFiltration& filt, const PermGroup& G,
                                    std::uint32_t order) {
    BigRat total = 0;
    std::uint64_t g0 = filt.chain.front().order();
    for (const auto& Gi : filt.chain) {
        std::uint64_t fix = fixed_dim_of_values(values, Gi, G, order);
        std::uint64_t codim = deg - fix;
        if (codim == 0) continue;
        total += BigRat(BigInt(Gi.order()) * BigInt(codim), BigInt(g0));
    }
    return total;
}

} // namespace

std::uint64_t tensor_trivial_multiplicity(const TableRow& rho, const TableRow& psi) {
    require_same_group(rho, psi);
    const auto& G = *rho.table->group();
    std::uint32_t order = rho.table->value_order();
    Cyclotomic s(order);
    for (std::size_t j = 0; j < G.classes().size(); ++j)
        s += rho.value(static_cast<int>(j)) * psi.value(static_cast<int>(j)).conjugate() *
             static_cast<long long>(G.classes()[j].size);
    long long mult = s.divided_by(static_cast<long long>(G.order())).to_integer();
    if (mult < 0) throw std::logic_error("tensor multiplicity is negative");
    return static_cast<std::uint64_t>(mult);
}

std::uint64_t fixed_space_dim(const TableRow& rho, const Subgroup& H) {
    require_same_group(rho, H);
    return fixed_dim_of_values(row_values(rho), H, *rho.table->group(), rho.table->value_order());
}

RamificationFiltration make_filtration(std::vector<Subgroup> chain) {
    if (chain.empty()) throw std::domain_error("make_filtration: chain must be nonempty");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (chain[i].group->canonical_key() != chain[i + 1].group->canonical_key())
            throw std::domain_error("make_filtration: mixed parent groups");
        if (!chain[i].contains_subgroup(chain[i + 1]))
            throw std::domain_error("make_filtration: chain is not decreasing");
    }
    if (!chain.back().is_trivial()) chain.push_back(trivial_subgroup(chain.back().group));
    return RamificationFiltration{std::move(chain)};
}

BigRat artin_conductor_exponent(const TableRow& rho, const RamificationFiltration& filt) {
    require_same_group(rho, filt.chain.front());
    return conductor_exponent_of_values(row_values(rho), rho.degree(), filt, *rho.table->group(),
                                        rho.table->value_order());
}

TensorConductorCheck tensor_conductor_check(const TableRow& rho, const TableRow& psi,
                                            const RamificationFiltration& filt) {
    require_same_group(rho, psi);
    require_same_group(rho, filt.chain.front());
    const auto& G = *rho.table->group();
    std::uint32_t order = rho.table->value_order();
    std::vector<Cyclotomic> tensor;
    tensor.reserve(G.classes().size());
    for (std::size_t j = 0; j < G.classes().size(); ++j)
        tensor.push_back(rho.value(static_cast<int>(j)) * psi.value(static_cast<int>(j)).conjugate());
    BigRat lhs = conductor_exponent_of_values(tensor, rho.degree() * psi.degree(), filt, G, order);
    BigRat f_rho = artin_conductor_exponent(rho, filt);
    BigRat f_psi = artin_conductor_exponent(psi, filt);
    BigRat rhs = BigRat(std::max(rho.degree(), psi.degree())) * (f_rho + f_psi);
    return TensorConductorCheck{lhs, rhs, lhs <= rhs};
}

} // namespace rdcert::repr
