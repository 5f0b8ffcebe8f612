#pragma once

#include "fivefour/agreement.hpp"
#include "fivefour/eigen.hpp"

#include <array>
#include <string>
#include <vector>

namespace fivefour {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

// Conservative-leaning justices used to orient dimension 1 when no anchor is
// configured. Orientation is cosmetic: every downstream result is reflection invariant.
std::vector<std::string> default_anchors();

struct MdsOptions {
    // Candidate anchor justices, in priority order. The first one on the roster
    // (exact name, else a name ending in it, so "CThomas" matches "Thomas") is
    // placed on the positive side of dimension 1. With no match, the justice
    // with the largest |x1| is.
    std::vector<std::string> anchors = default_anchors();
    EigenOptions eigen;
};

// Classical MDS coordinates of the nine justices. Dimension 1 is the first
// coordinate; in a 1-D embedding every y is zero.
struct Embedding {
    std::vector<Justice> roster;
    std::vector<Point> coords;
    int dimension = 2;
    std::array<double, 2> eigenvalues{};      // leading eigenvalues used (negatives truncated to 0)
    std::vector<double> spectrum;             // all eigenvalues of the centered matrix, descending
    std::string orientation_note;

    std::size_t size() const { return coords.size(); }
    std::size_t index_of(const std::string& name) const;
    std::vector<std::string> names() const;
};

Embedding classical_mds(const DissimilarityMatrix& d, int dimension, const MdsOptions& options = {},
                        Diagnostics* diag = nullptr);

// Sum over pairs of (embedded distance - dissimilarity)^2.
double stress(const DissimilarityMatrix& d, const Embedding& e);

// Wraps raw planar coordinates (synthetic configurations, transformed copies).
Embedding make_embedding(std::vector<Justice> roster, std::vector<Point> coords);

std::string embedding_json(const Embedding& e);
void write_embedding_csv(std::ostream& out, const Embedding& e);

}  // namespace fivefour
