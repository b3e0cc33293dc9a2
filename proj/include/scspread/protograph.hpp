#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace scspread {

// Fully connected bipartite base graph with `gamma` check-node types and
// `kappa` variable-node types. Every (row, column) pair is an edge, so the
// edge set has size gamma * kappa and there are no parallel edges.
struct BaseGraph {
    int gamma = 0;
    int kappa = 0;

    long long edge_count() const { return static_cast<long long>(gamma) * kappa; }

    friend bool operator==(const BaseGraph&, const BaseGraph&) = default;
};

BaseGraph make_base_graph(int gamma, int kappa);

// Admissible component indices (a_0, ..., a_{m_t}): strictly increasing,
// starting at 0. memory() is the largest index a_{m_t} = m; the pattern may
// skip intermediate indices.
class CouplingPattern {
public:
    explicit CouplingPattern(std::vector<int> values);

    // The gap-free pattern (0, 1, ..., memory).
    static CouplingPattern consecutive(int memory);

    const std::vector<int>& values() const { return values_; }
    int memory() const { return values_.back(); }
    int size() const { return static_cast<int>(values_.size()); }  // m_t + 1
    int mt() const { return size() - 1; }
    bool contains(int value) const;

    friend bool operator==(const CouplingPattern&, const CouplingPattern&) = default;

private:
    std::vector<int> values_;
};

// gamma x kappa grid assigning each base edge to a component index. This is
// the design variable of the whole toolkit.
class PartitionMatrix {
public:
    PartitionMatrix(int gamma, int kappa, std::vector<int> entries);

    static PartitionMatrix constant(int gamma, int kappa, int value);

    int gamma() const { return gamma_; }
    int kappa() const { return kappa_; }
    int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * kappa_ + j]; }
    int at(int i, int j) const;  // range-checked
    int max_entry() const;
    const std::vector<int>& entries() const { return entries_; }

    friend bool operator==(const PartitionMatrix&, const PartitionMatrix&) = default;

private:
    int gamma_;
    int kappa_;
    std::vector<int> entries_;  // row-major
};

// Binary component matrices H_0, ..., H_m. Entrywise they sum to the
// all-one matrix; patterns with gaps leave some components all-zero.
struct ComponentMatrices {
    int gamma = 0;
    int kappa = 0;
    std::vector<std::vector<std::uint8_t>> mats;  // m+1 row-major gamma*kappa grids

    int memory() const { return static_cast<int>(mats.size()) - 1; }
};

// A partition entry that is not an admissible component index.
struct invalid_partition_error : std::invalid_argument {
    invalid_partition_error(int row_, int col_, int value_);
    int row;
    int col;
    int value;
};

ComponentMatrices spread_edges(const BaseGraph& base, const PartitionMatrix& p,
                               const CouplingPattern& pattern);

// Inverse of spread_edges: reads the unique component index of each edge.
PartitionMatrix recover_partition(const ComponentMatrices& comps);

// Coordinate-list sparse binary matrix; nonzeros are kept sorted and unique.
class SparseBinaryMatrix {
public:
    using Coord = std::pair<int, int>;

    SparseBinaryMatrix(int rows, int cols, std::vector<Coord> nonzeros);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Coord>& nonzeros() const { return nonzeros_; }
    std::int64_t nnz() const { return static_cast<std::int64_t>(nonzeros_.size()); }
    std::vector<int> row_degrees() const;
    std::vector<int> col_degrees() const;

    static constexpr std::int64_t dense_cell_limit = 100'000'000;

    // Row-major 0/1 expansion; refuses matrices above dense_cell_limit cells.
    std::vector<std::uint8_t> to_dense() const;

    friend bool operator==(const SparseBinaryMatrix&, const SparseBinaryMatrix&) = default;

private:
    int rows_;
    int cols_;
    std::vector<Coord> nonzeros_;
};

// Terminated spatially-coupled parity-check matrix: block at block-row t,
// block-column s is H_{t-s} for 0 <= t-s <= m and zero otherwise, giving a
// (L+m)*gamma x L*kappa band with exactly L*gamma*kappa nonzeros.
SparseBinaryMatrix build_sc_matrix(const ComponentMatrices& comps, int coupling_length);

// P(i, j) = i * j. Deactivates every 4-cycle and uses memory exactly
// (gamma-1)(kappa-1).
PartitionMatrix explicit_product_assignment(const BaseGraph& base);

}  // namespace scspread
