#pragma once

#include "strathom/error.hpp"
#include "strathom/poset.hpp"

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace strathom {

// Monotone map [k] -> [n] stored as its values.
using Mono = std::vector<int>;
// Degeneracy word s_{i1} ... s_{ik}, i1 > ... > ik.
using Word = std::vector<int>;

Mono identity_mono(int n);
Mono coface_mono(int n, int i);          // [n-1] -> [n], skips i
Mono compose_mono(const Mono& a, const Mono& b);  // a after b
bool is_surjection(const Mono& m, int target_dim);
// theta = inj o surj with inj listing the image
void factor_mono(const Mono& theta, Mono& inj, Mono& surj);

Word word_of(const Mono& surj);
Mono surj_of(const Word& w, int source_dim);

// A simplex of a simplicial set in normal form: cell o eta with eta surjective.
struct Simplex {
    Mono eta;
    int cell = -1;

    int dim() const { return static_cast<int>(eta.size()) - 1; }
    bool nondegenerate() const;
    bool operator==(const Simplex& o) const { return cell == o.cell && eta == o.eta; }
    bool operator!=(const Simplex& o) const { return !(*this == o); }
    bool operator<(const Simplex& o) const { return cell != o.cell ? cell < o.cell : eta < o.eta; }
};

Simplex nd(int cell, int dim);  // identity simplex of a cell

struct Cell {
    std::string id;
    int dim = 0;
    std::vector<Simplex> faces;  // faces[i] = d_i
};

struct Diagnostic {
    std::string code;
    std::vector<std::string> cells;
    std::string message;
};

// Finite filtered simplicial set: nondegenerate cells only, faces in normal form,
// vertex labels into a poset.
class SSet {
public:
    SSet() : poset_(std::make_shared<Poset>(Poset::point())) {}
    explicit SSet(Poset P) : poset_(std::make_shared<Poset>(std::move(P))) {}
    explicit SSet(std::shared_ptr<const Poset> P) : poset_(std::move(P)) {}

    // Faces may reference cells added later; call finalize() once all are in.
    int add_cell(std::string id, int dim, std::vector<Simplex> faces, int label = -1);
    void finalize();

    const Poset& poset() const { return *poset_; }
    const std::shared_ptr<const Poset>& poset_ptr() const { return poset_; }
    int size() const { return static_cast<int>(cells_.size()); }
    bool empty() const { return cells_.empty(); }
    const Cell& cell(int c) const { return cells_[c]; }
    const std::vector<Cell>& cells() const { return cells_; }
    const std::string& id(int c) const { return cells_[c].id; }
    int dim(int c) const { return cells_[c].dim; }
    int dim() const;  // -1 when empty
    int find(const std::string& id) const;  // -1 when absent
    int index(const std::string& id) const;  // throws identifier error
    int label(int vertex) const { return labels_[vertex]; }
    const std::vector<int>& vertices(int c) const { return verts_[c]; }
    DFlag flag(int c) const;
    int max_label(int c) const;  // last entry of the flag
    std::vector<int> count_by_dim() const;

    Simplex face(int c, int i) const { return cells_[c].faces[i]; }
    Simplex face(const Simplex& x, int i) const;
    Simplex apply(const Simplex& x, const Mono& theta) const;  // x o theta
    Simplex face_along(int c, const Mono& inj) const;
    std::vector<int> closure(int c) const;  // c and all its iterated face cells
    std::vector<std::vector<int>> cofaces() const;  // direct incidences, deduplicated

    // order of vertex_label keys for serialization
    const std::vector<int>& label_order() const { return label_order_; }
    void set_label_order(std::vector<int> o) { label_order_ = std::move(o); }

private:
    std::shared_ptr<const Poset> poset_;
    std::vector<Cell> cells_;
    std::unordered_map<std::string, int> by_id_;
    std::vector<int> labels_;
    std::vector<std::vector<int>> verts_;
    std::vector<int> label_order_;
    bool final_ = false;
};

std::vector<Diagnostic> validate(const SSet& X);
DFlag flag_of(const SSet& X, int c);

// Stratum-preserving simplicial map, given on nondegenerate cells.
struct SMap {
    std::vector<Simplex> img;
};

Simplex apply_map(const SMap& f, const Simplex& s);
std::vector<Diagnostic> check_map(const SSet& X, const SSet& Y, const SMap& f);
SMap compose(const SMap& f, const SMap& g);  // g o f
SMap identity_map(const SSet& X);
bool is_isomorphism(const SSet& X, const SSet& Y, const SMap& f);
bool is_injective(const SMap& f);

// keep must be face-closed; new_index receives old -> new (or -1)
SSet subset(const SSet& X, const std::vector<char>& keep, std::vector<int>* new_index = nullptr);
SSet subset(const SSet& X, const std::vector<std::string>& keep_ids);
SMap inclusion_map(const SSet& X, const std::vector<char>& keep);  // subset(X,keep) -> X
std::vector<char> face_closure(const SSet& X, const std::vector<char>& seed);

struct PushoutResult {
    SSet D;
    SMap from_C;  // C -> D
    SMap from_B;  // B -> D
    std::vector<int> new_of_B;  // B cell -> D cell for cells outside i(A), else -1
};
PushoutResult pushout(const SSet& A, const SSet& B, const SMap& i, const SSet& C, const SMap& f);

struct CoproductResult {
    SSet S;
    std::vector<int> of_X, of_Y;
};
CoproductResult coproduct(const SSet& X, const SSet& Y);

// X (x) S with S unfiltered; cells are (x, s, walk) with walk surjecting onto both.
struct ProductCell {
    int x = -1, s = -1;
    std::vector<std::pair<int, int>> walk;
};
struct Product {
    SSet P;
    std::vector<ProductCell> info;
    int lookup(int x, int s, const std::vector<std::pair<int, int>>& walk) const;
    std::unordered_map<std::string, int> key_index;
    static std::string key(int x, int s, const std::vector<std::pair<int, int>>& walk);
};
Product outer_product(const SSet& X, const SSet& S);
// product of simplices in normal form, as a simplex of the product
Simplex product_simplex(const Product& prod, const SSet& X, const SSet& S, const Simplex& a, const Simplex& b);

// standard simplices, ids "0","01",... (dot separated past 10 vertices)
std::string subset_id(const std::vector<int>& verts);
SSet simplex_set(const Poset& P, const DFlag& J);
SSet unfiltered_simplex(int n);
// subcomplex masks of a standard simplex (cells indexed as in simplex_set)
std::vector<char> boundary_mask(const SSet& simplex);
std::vector<char> horn_mask(const SSet& simplex, int k);
std::vector<int> subset_of_cell(const SSet& simplex, int c);

// Ordered simplicial complex from vertex tuples; faces are added automatically.
SSet complex_from_simplices(const Poset& P, const std::vector<std::string>& vertex_ids,
                            const std::vector<int>& vertex_labels,
                            const std::vector<std::vector<int>>& simplices,
                            const std::string& sep = ".");

std::optional<std::vector<int>> find_isomorphism(const SSet& X, const SSet& Y);
bool same_by_id(const SSet& X, const SSet& Y);

// base if unused in taken, else base~tag, base~tag2, ...
std::string fresh_id(const std::string& base, const SSet& taken, const std::string& tag);

}  // namespace strathom
