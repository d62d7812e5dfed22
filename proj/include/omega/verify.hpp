#pragma once

// Verification suites, one per checkable proposition, emitting deterministic
// JSON reports. Suites sweep exhaustively generated corpora; instances run
// concurrently and the report assembly is order-independent.

#include "omega/homotopy.hpp"

namespace omega {

struct UnknownSuite : TreeError {
    using TreeError::TreeError;
};

struct Bounds {
    int max_vertices = 3;   // tree corpus bound
    int max_arity = 3;
    int m = 2, n = 2;       // simplicial bounds (suite-specific meaning)
    int sum_bound = 8;      // m+n sweep bound for shuffle counts
    int shape_bound = 2;    // bounded element scans on tensor ambients
    int functoriality_vertices = 3;  // corpus for composition sweeps
    int restarts = 32;
    unsigned long long seed = 0;
    long long budget = 400000;
};

struct VerificationReport {
    std::string suite;
    Bounds bounds;
    struct Instance {
        std::string key;
        bool pass = false;
        std::string detail;
    };
    std::vector<Instance> instances;  // sorted by key
    long long passed = 0, failed = 0;

    bool ok() const { return failed == 0; }
    std::string to_json() const;
};

// Known suites: S2.shuffle-count, S2.prop-asph, S3.factorisation,
// S3.fully-faithful, S3.horns, S3.normal, S4.adjunction, S4.dec-naturality,
// S4.counterexample, S5.prop-shuffles, S5.prod-trees, S5.segal-core,
// S5.cylinder, S1.elements, remark.eta-x-c2, engine.self-check.
std::vector<std::string> suite_ids();
VerificationReport run_verify(const std::string& suite, const Bounds& b);

}  // namespace omega
