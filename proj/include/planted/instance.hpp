#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "planted/graph.hpp"

namespace planted {

// Edge-adding strategies applied after the random boundary is drawn.  None of
// them ever touches a pair inside the planted set.
struct AdversaryStrategy {
    enum class Kind { empty, decoy_independent_set, gnp_complement, dense_boundary };

    Kind kind = Kind::empty;
    int decoy_size = 0;        // decoy_independent_set: requested hole size
    double probability = 0.0;  // gnp_complement: q, dense_boundary: f

    // Accepts "empty", "decoy_independent_set:M", "gnp_complement:Q",
    // "dense_boundary:F".  M may be "k+C" or "k-C", resolved against k.
    static AdversaryStrategy parse(const std::string& text, int k);
    std::string canonical_name() const;
    void validate() const;
};

struct GenerationParams {
    int n = 0;
    int k = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    AdversaryStrategy adversary;
};

struct PlantedInstance {
    Graph graph;
    std::vector<int> planted;                          // sorted, size k
    std::vector<std::pair<int, int>> random_boundary;  // (u in S, v not in S), sorted
    GenerationParams params;

    bool in_planted(int v) const;
    std::vector<int> complement() const;  // sorted V - S

    bool operator==(const PlantedInstance& other) const;
};

// Draws S uniformly among size-k subsets, each boundary pair independently
// with probability p, then applies the adversary.  Stream order is pinned in
// instance.cpp; identical parameters yield bit-identical instances.
PlantedInstance generate_instance(const GenerationParams& params);

std::string serialize_instance(const PlantedInstance& instance);
PlantedInstance parse_instance(const std::string& text);

}  // namespace planted
