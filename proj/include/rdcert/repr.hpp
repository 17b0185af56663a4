#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rdcert/arith.hpp"
#include "rdcert/cyclotomic.hpp"

namespace rdcert::repr {

inline constexpr std::uint64_t kDefaultGroupOrderCap = 10'000;
inline constexpr std::uint64_t kDefaultTableOrderCap = 2'000;
inline constexpr std::uint64_t kDefaultTableClassCap = 64;
inline constexpr std::uint64_t kDefaultSubgroupEnumCap = 200;

/// A permutation of {0, ..., n-1} by its image vector.
class Perm {
public:
    explicit Perm(int n);
    explicit Perm(std::vector<int> images);

    int degree() const { return static_cast<int>(img_.size()); }
    int image(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    /// Composition: apply *this first, then `next`.
    Perm then(const Perm& next) const;
    Perm inverse() const;
    bool is_identity() const;
    std::uint64_t order() const;

    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> img_;
};

/// Parses "(1 2)(3 4), (1 2 3)" into permutations (1-based points in text).
/// `moved_points` is raised to the largest point seen if smaller.
std::vector<Perm> parse_generators(const std::string& text, int& moved_points);

/// Canonical disjoint-cycle form, 1-based; "()" for the identity.
std::string cycles_string(const Perm& p);

struct ConjugacyClass {
    int representative = 0; // element index of the lex-least member
    std::uint64_t size = 1;
    std::uint64_t element_order = 1;
};

class PermGroup;
using PermGroupPtr = std::shared_ptr<const PermGroup>;

/// A finite permutation group with its elements fully enumerated and its
/// conjugacy classes in a reproducible canonical order: identity first, then
/// ascending class size, ties by element order, ties by lex-least representative.
class PermGroup {
public:
    int moved_points() const { return degree_; }
    const std::vector<Perm>& generators() const { return generators_; }
    std::uint64_t order() const { return elements_.size(); }
    /// Elements sorted by image vector; index 0 is the identity.
    const std::vector<Perm>& elements() const { return elements_; }
    /// Index of a permutation, or -1 when absent.
    int element_index(const Perm& p) const;
    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    int class_of(int element_index) const { return class_of_[static_cast<std::size_t>(element_index)]; }
    const std::vector<int>& class_members(int class_index) const;
    std::uint64_t exponent() const { return exponent_; }
    int inverse_class(int class_index) const;
    int multiply(int a, int b) const; // element index of elements[a] then elements[b]
    int inverse_element(int e) const;

    /// Stable identity for caching: moved points, sorted generator cycles,
    /// order, class signature.
    const std::string& canonical_key() const { return key_; }

private:
    friend PermGroupPtr group_from_generators(int, std::vector<Perm>, std::uint64_t);
    int degree_ = 1;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
    std::vector<int> class_of_;
    std::vector<ConjugacyClass> classes_;
    std::vector<std::vector<int>> members_;
    std::vector<int> inverse_class_;
    std::vector<int> inverse_element_;
    std::uint64_t exponent_ = 1;
    std::string key_;
};

PermGroupPtr group_from_generators(int moved_points, std::vector<Perm> generators,
                                   std::uint64_t order_cap = kDefaultGroupOrderCap);

/// A subgroup given by sorted element indices into its parent group.
/// Construct through subgroup_closure so closure is guaranteed.
struct Subgroup {
    PermGroupPtr group;
    std::vector<int> elements;   // sorted, always contains the identity (index 0)
    std::vector<int> generators; // element indices

    std::uint64_t order() const { return elements.size(); }
    bool contains(int e) const;
    bool contains_subgroup(const Subgroup& other) const;
    bool is_trivial() const { return elements.size() == 1; }
};

Subgroup subgroup_closure(const PermGroupPtr& group, const std::vector<int>& generator_indices);
Subgroup trivial_subgroup(const PermGroupPtr& group);

class CharacterTable;
using CharacterTablePtr = std::shared_ptr<const CharacterTable>;

/// Exact character table of a finite group. Values are cyclotomic integers on
/// the basis of exponent-th roots of unity. A table is only ever returned
/// after passing the certification gates (degree sum, row and column
/// orthogonality); failures throw TableError.
class CharacterTable {
public:
    const PermGroupPtr& group() const { return group_; }
    std::uint32_t value_order() const { return value_order_; }
    int row_count() const { return static_cast<int>(degrees_.size()); }
    std::uint64_t degree(int row) const { return degrees_[static_cast<std::size_t>(row)]; }
    const std::vector<std::uint64_t>& degrees() const { return degrees_; }
    const cyclo::Cyclotomic& value(int row, int cls) const;

private:
    friend CharacterTablePtr character_table(const PermGroupPtr&, std::uint64_t, std::uint64_t);
    PermGroupPtr group_;
    std::uint32_t value_order_ = 1;
    std::vector<std::uint64_t> degrees_;
    std::vector<std::vector<cyclo::Cyclotomic>> values_; // [row][class]
};

/// Dixon-Schneider: split the class algebra over a prime field with
/// p = 1 mod exponent, p > 2 sqrt(|G|), then lift eigenvalues to exact
/// cyclotomic integers by a discrete Fourier transform mod p.
CharacterTablePtr character_table(const PermGroupPtr& group,
                                  std::uint64_t order_cap = kDefaultTableOrderCap,
                                  std::uint64_t class_cap = kDefaultTableClassCap);

/// One irreducible row of a certified table.
struct TableRow {
    CharacterTablePtr table;
    int index = 0;
    std::uint64_t degree() const { return table->degree(index); }
    const cyclo::Cyclotomic& value(int cls) const { return table->value(index, cls); }
};

std::uint64_t max_irr_degree(const CharacterTable& table);
std::uint64_t max_irr_degree(const PermGroupPtr& group);

/// Minimum index [G : A] over abelian subgroups A, by exhaustive enumeration
/// of abelian subgroups. Throws SizeError above the cap.
std::uint64_t min_abelian_subgroup_index(const PermGroupPtr& group,
                                         std::uint64_t order_cap = kDefaultSubgroupEnumCap);

/// Multiplicity of the trivial representation in rho tensor conj(psi);
/// 1 iff rho = psi for irreducible rows.
std::uint64_t tensor_trivial_multiplicity(const TableRow& rho, const TableRow& psi);

/// dim of the H-fixed subspace of rho, = (1/|H|) sum_{h in H} chi(h), exactly.
std::uint64_t fixed_space_dim(const TableRow& rho, const Subgroup& H);

/// A decreasing chain G_0 >= G_1 >= ... of subgroups; construction appends the
/// trivial group when absent and validates containments.
struct RamificationFiltration {
    std::vector<Subgroup> chain;
    std::uint64_t g(std::size_t i) const { return chain[i].order(); }
};

RamificationFiltration make_filtration(std::vector<Subgroup> chain);

/// f(rho) = sum_i (g_i/g_0) codim V_rho^{G_i}, an exact nonnegative rational.
BigRat artin_conductor_exponent(const TableRow& rho, const RamificationFiltration& filt);

struct TensorConductorCheck {
    BigRat lhs; // conductor exponent of the tensor character
    BigRat rhs; // max(deg rho, deg psi) * (f(rho) + f(psi))
    bool holds = false;
};

TensorConductorCheck tensor_conductor_check(const TableRow& rho, const TableRow& psi,
                                            const RamificationFiltration& filt);

} // namespace rdcert::repr
