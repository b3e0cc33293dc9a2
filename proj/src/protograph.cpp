#include "scspread/protograph.hpp"

#include <algorithm>
#include <string>

#include "scspread/errors.hpp"

namespace scspread {

namespace {

// Downstream load and threshold formulas multiply up to four dimension
// factors; this cap keeps them inside 64-bit range.
constexpr long long kMaxEdges = 1'000'000;

}  // namespace

BaseGraph make_base_graph(int gamma, int kappa) {
    if (gamma < 1 || kappa < 1)
        throw std::invalid_argument("make_base_graph: gamma and kappa must be >= 1");
    if (static_cast<long long>(gamma) * kappa > kMaxEdges)
        throw std::invalid_argument("make_base_graph: gamma * kappa exceeds " +
                                    std::to_string(kMaxEdges) + " edges");
    return BaseGraph{gamma, kappa};
}

CouplingPattern::CouplingPattern(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty())
        throw std::invalid_argument("coupling pattern: must contain at least one value");
    if (values_.front() != 0)
        throw std::invalid_argument("coupling pattern: first value must be 0");
    for (std::size_t k = 1; k < values_.size(); ++k)
        if (values_[k] <= values_[k - 1])
            throw std::invalid_argument("coupling pattern: values must be strictly increasing");
}

CouplingPattern CouplingPattern::consecutive(int memory) {
    if (memory < 0) throw std::invalid_argument("coupling pattern: memory must be >= 0");
    std::vector<int> values(static_cast<std::size_t>(memory) + 1);
    for (int v = 0; v <= memory; ++v) values[static_cast<std::size_t>(v)] = v;
    return CouplingPattern(std::move(values));
}

bool CouplingPattern::contains(int value) const {
    return std::binary_search(values_.begin(), values_.end(), value);
}

PartitionMatrix::PartitionMatrix(int gamma, int kappa, std::vector<int> entries)
    : gamma_(gamma), kappa_(kappa), entries_(std::move(entries)) {
    if (gamma_ < 1 || kappa_ < 1)
        throw std::invalid_argument("partition matrix: dimensions must be >= 1");
    if (entries_.size() != static_cast<std::size_t>(gamma_) * static_cast<std::size_t>(kappa_))
        throw std::invalid_argument("partition matrix: entry count does not match dimensions");
    for (int e : entries_)
        if (e < 0) throw std::invalid_argument("partition matrix: entries must be >= 0");
}

PartitionMatrix PartitionMatrix::constant(int gamma, int kappa, int value) {
    return PartitionMatrix(gamma, kappa,
                           std::vector<int>(static_cast<std::size_t>(gamma) * kappa, value));
}

int PartitionMatrix::at(int i, int j) const {
    if (i < 0 || i >= gamma_ || j < 0 || j >= kappa_)
        throw std::out_of_range("partition matrix: index out of range");
    return (*this)(i, j);
}

int PartitionMatrix::max_entry() const {
    return *std::max_element(entries_.begin(), entries_.end());
}

invalid_partition_error::invalid_partition_error(int row_, int col_, int value_)
    : std::invalid_argument("partition entry P(" + std::to_string(row_) + "," +
                            std::to_string(col_) + ") = " + std::to_string(value_) +
                            " is not in the coupling pattern"),
      row(row_), col(col_), value(value_) {}

ComponentMatrices spread_edges(const BaseGraph& base, const PartitionMatrix& p,
                               const CouplingPattern& pattern) {
    if (p.gamma() != base.gamma || p.kappa() != base.kappa)
        throw std::invalid_argument("spread_edges: partition matrix does not match base graph");
    const int m = pattern.memory();
    ComponentMatrices comps;
    comps.gamma = base.gamma;
    comps.kappa = base.kappa;
    comps.mats.assign(static_cast<std::size_t>(m) + 1,
                      std::vector<std::uint8_t>(static_cast<std::size_t>(base.gamma) * base.kappa, 0));
    for (int i = 0; i < base.gamma; ++i) {
        for (int j = 0; j < base.kappa; ++j) {
            const int l = p(i, j);
            if (!pattern.contains(l)) throw invalid_partition_error(i, j, l);
            comps.mats[static_cast<std::size_t>(l)][static_cast<std::size_t>(i) * base.kappa + j] = 1;
        }
    }
    return comps;
}

PartitionMatrix recover_partition(const ComponentMatrices& comps) {
    const std::size_t cells = static_cast<std::size_t>(comps.gamma) * comps.kappa;
    std::vector<int> entries(cells, -1);
    for (std::size_t l = 0; l < comps.mats.size(); ++l) {
        if (comps.mats[l].size() != cells)
            throw std::invalid_argument("recover_partition: component size mismatch");
        for (std::size_t e = 0; e < cells; ++e) {
            if (!comps.mats[l][e]) continue;
            if (entries[e] != -1)
                throw std::invalid_argument("recover_partition: edge assigned to two components");
            entries[e] = static_cast<int>(l);
        }
    }
    for (int v : entries)
        if (v == -1) throw std::invalid_argument("recover_partition: edge assigned to no component");
    return PartitionMatrix(comps.gamma, comps.kappa, std::move(entries));
}

SparseBinaryMatrix::SparseBinaryMatrix(int rows, int cols, std::vector<Coord> nonzeros)
    : rows_(rows), cols_(cols), nonzeros_(std::move(nonzeros)) {
    if (rows_ < 0 || cols_ < 0)
        throw std::invalid_argument("sparse matrix: dimensions must be >= 0");
    for (const auto& [r, c] : nonzeros_)
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::invalid_argument("sparse matrix: coordinate out of range");
    std::sort(nonzeros_.begin(), nonzeros_.end());
    if (std::adjacent_find(nonzeros_.begin(), nonzeros_.end()) != nonzeros_.end())
        throw std::invalid_argument("sparse matrix: duplicate coordinate");
}

std::vector<int> SparseBinaryMatrix::row_degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(rows_), 0);
    for (const auto& [r, c] : nonzeros_) ++deg[static_cast<std::size_t>(r)];
    return deg;
}

std::vector<int> SparseBinaryMatrix::col_degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(cols_), 0);
    for (const auto& [r, c] : nonzeros_) ++deg[static_cast<std::size_t>(c)];
    return deg;
}

std::vector<std::uint8_t> SparseBinaryMatrix::to_dense() const {
    const std::int64_t cells = static_cast<std::int64_t>(rows_) * cols_;
    if (cells > dense_cell_limit)
        throw resource_limit_error("sparse matrix: dense expansion of " + std::to_string(cells) +
                                       " cells refused",
                                   static_cast<double>(cells), dense_cell_limit);
    std::vector<std::uint8_t> dense(static_cast<std::size_t>(cells), 0);
    for (const auto& [r, c] : nonzeros_)
        dense[static_cast<std::size_t>(r) * cols_ + c] = 1;
    return dense;
}

SparseBinaryMatrix build_sc_matrix(const ComponentMatrices& comps, int coupling_length) {
    if (coupling_length < 1)
        throw std::invalid_argument("build_sc_matrix: coupling length must be >= 1");
    const int m = comps.memory();
    const int gamma = comps.gamma;
    const int kappa = comps.kappa;
    const int rows = (coupling_length + m) * gamma;
    const int cols = coupling_length * kappa;

    std::vector<SparseBinaryMatrix::Coord> coords;
    coords.reserve(static_cast<std::size_t>(coupling_length) * gamma * kappa);
    for (int l = 0; l <= m; ++l) {
        const auto& mat = comps.mats[static_cast<std::size_t>(l)];
        for (int i = 0; i < gamma; ++i) {
            for (int j = 0; j < kappa; ++j) {
                if (!mat[static_cast<std::size_t>(i) * kappa + j]) continue;
                for (int s = 0; s < coupling_length; ++s) {
                    const int t = s + l;
                    coords.emplace_back(t * gamma + i, s * kappa + j);
                }
            }
        }
    }
    return SparseBinaryMatrix(rows, cols, std::move(coords));
}

PartitionMatrix explicit_product_assignment(const BaseGraph& base) {
    std::vector<int> entries(static_cast<std::size_t>(base.gamma) * base.kappa);
    for (int i = 0; i < base.gamma; ++i)
        for (int j = 0; j < base.kappa; ++j)
            entries[static_cast<std::size_t>(i) * base.kappa + j] = i * j;
    return PartitionMatrix(base.gamma, base.kappa, std::move(entries));
}

}  // namespace scspread
