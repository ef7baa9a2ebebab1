#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bmat/gf2.hpp"

namespace bmat {

using Label = std::string;
using ElementSet = std::vector<int>;  // indices into the ground set

// Binary matroid: ordered labeled ground set plus one GF(2) column per
// element. Columns are stored in coordinates of full row rank, so the
// number of rows equals the rank (at most 64).
class BinaryMatroid {
public:
    BinaryMatroid() = default;
    // Any number of rows; the representation is reduced to full row rank.
    BinaryMatroid(std::vector<Label> labels, const BitMatrix& rep);
    // Columns as words over at most 64 coordinates.
    static BinaryMatroid from_columns(std::vector<Label> labels, const std::vector<Word>& cols);
    // [I_r | A] with labels for the identity part first.
    static BinaryMatroid standard_form(std::vector<Label> labels, const BitMatrix& a);

    int size() const { return static_cast<int>(cols_.size()); }
    int rank() const { return rank_; }
    int corank() const { return size() - rank_; }

    const std::vector<Label>& labels() const { return labels_; }
    const Label& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    int index_of(const Label& l) const;  // throws std::out_of_range
    std::optional<int> find(const Label& l) const;
    bool has_label(const Label& l) const { return index_.count(l) != 0; }
    ElementSet indices_of(const std::vector<Label>& ls) const;
    std::vector<Label> labels_of(const ElementSet& s) const;

    Word column(int i) const { return cols_[static_cast<std::size_t>(i)]; }
    const std::vector<Word>& columns() const { return cols_; }
    BitMatrix matrix() const { return BitMatrix::from_columns(cols_, static_cast<std::size_t>(rank_)); }

    bool is_loop(int i) const { return column(i) == 0; }
    int rank_of(const ElementSet& x) const;
    int rank_of_labels(const std::vector<Label>& x) const { return rank_of(indices_of(x)); }
    int lambda(const ElementSet& x) const;
    int lambda_labels(const std::vector<Label>& x) const { return lambda(indices_of(x)); }
    ElementSet closure(const ElementSet& x) const;
    ElementSet complement(const ElementSet& x) const;

    BinaryMatroid restrict_to(const ElementSet& keep) const;
    BinaryMatroid delete_elements(const ElementSet& del) const;
    BinaryMatroid contract_elements(const ElementSet& con) const;
    BinaryMatroid minor(const ElementSet& contract, const ElementSet& del) const;
    BinaryMatroid minor_labels(const std::vector<Label>& contract, const std::vector<Label>& del) const;
    BinaryMatroid dual() const;

    BinaryMatroid relabeled(std::vector<Label> labels) const;
    BinaryMatroid relabeled(const std::map<Label, Label>& m) const;
    // Adds a new element with the given column (in this matroid's coordinates).
    BinaryMatroid with_element(const Label& l, Word col) const;

    // Indices of a basis, chosen greedily in ground-set order.
    ElementSet greedy_basis() const;
    // Column vectors written in the coordinates of the given basis.
    std::vector<Word> coordinates_in_basis(const ElementSet& basis) const;

    // Row-space comparison after aligning labels: true when both matroids
    // have the same ground set and the same cycles.
    bool same_matroid(const BinaryMatroid& other) const;
    // Full matrix over the given label order (rank rows).
    BitMatrix matrix_for(const std::vector<Label>& order) const;

    std::string name;

private:
    void rebuild_index();

    std::vector<Label> labels_;
    std::vector<Word> cols_;
    int rank_ = 0;
    std::unordered_map<Label, int> index_;
};

struct Separation {
    std::vector<Label> side1, side2;
    int order = 0;  // k of the k-separation
    bool exact = false;
};
// Recomputes lambda and sizes.
bool verify_separation(const BinaryMatroid& m, const Separation& s);

// Simplification: loops dropped, one representative (first in ground order)
// per parallel class.
struct Simplification {
    BinaryMatroid matroid;
    // representative label -> all labels of its parallel class
    std::map<Label, std::vector<Label>> classes;
    std::vector<Label> loops;
};
Simplification simplify(const BinaryMatroid& m);
int num_rank_one_flats(const BinaryMatroid& m);
bool is_simple(const BinaryMatroid& m);

enum class SupportKind { Circuit, Cocircuit };
// All circuits (or cocircuits) with at most max_size (<= 4) elements,
// each sorted, in lexicographic order.
std::vector<ElementSet> small_supports(const BinaryMatroid& m, SupportKind kind, int max_size);
std::vector<ElementSet> triangles(const BinaryMatroid& m);
std::vector<ElementSet> triads(const BinaryMatroid& m);
bool is_circuit(const BinaryMatroid& m, const ElementSet& x);

// Element-index bijection a -> b preserving the matroid, or nothing.
std::optional<std::vector<int>> find_isomorphism(const BinaryMatroid& a, const BinaryMatroid& b);
std::optional<std::map<Label, Label>> is_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b);
// Checks that the index map carries a onto b.
bool verify_isomorphism(const BinaryMatroid& a, const BinaryMatroid& b, const std::vector<int>& map);

// Cycle space as rows over the ground set (corank rows).
BitMatrix cycle_space(const BinaryMatroid& m);

}  // namespace bmat
