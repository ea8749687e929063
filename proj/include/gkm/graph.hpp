#pragma once

#include <string>
#include <vector>

#include "gkm/spaces.hpp"

namespace gkm {

enum class EdgeKind {
    Sphere,             // S^2, two endpoints, solid
    RP2,                // dotted, one endpoint, no congruence
    SphereTimesCircle,  // S^2 x RP^1 or S^2 x S^1 between two fixed circles
    RP3,                // one fixed circle, g == 0 mod weight
    S3,                 // oriented analogue of RP3
};

const char* edge_kind_name(EdgeKind k);

struct GkmEdge {
    int a = -1;
    int b = -1;  // -1 for one-ended edges
    LinearForm weight;
    EdgeKind kind = EdgeKind::Sphere;

    bool two_ended() const { return b >= 0; }
};

struct GkmGraph {
    SpaceId space;
    std::vector<FixedVertex> vertices;
    std::vector<GkmEdge> edges;

    int index_of(const FixedVertex& v) const;
    // three-dimensional components drawn as square vertices in pictures
    int square_count() const;
    std::vector<LinearForm> incident_weights(int v) const;
};

GkmGraph build_graph(const SpaceId& s);
// shared, immutable instance
const GkmGraph& graph_of(const SpaceId& s);

struct GkmReport {
    bool ok = true;
    std::vector<std::string> problems;
};

// pairwise independence of the weights at every vertex and vertex shape
GkmReport check_gkm_condition(const GkmGraph& g);
// incident edge weights equal the isotropy weights at every vertex
GkmReport check_completeness(const GkmGraph& g);

// Image of an oriented even graph in its real base: S+ and S- merge, parallel
// edges merge, and S+ -- S- edges become one-ended RP2 edges.
GkmGraph collapse_cover(const GkmGraph& oriented);

struct DotOptions {
    bool weight_labels = true;
};
std::string export_dot(const GkmGraph& g, const DotOptions& opt = {});
std::string graph_json(const GkmGraph& g);

}  // namespace gkm
