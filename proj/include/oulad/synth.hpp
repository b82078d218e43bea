#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oulad/tables.hpp"

namespace oulad {

struct SynthAssessment {
    std::string type;          // TMA | CMA | Exam
    std::optional<int> date;   // due day; Exams may leave it missing
    double weight = 0.0;
};

struct SynthPresentation {
    std::string module = "AAA";
    std::string presentation = "2013J";
    int length = 268;
    std::vector<SynthAssessment> assessments;
};

// Everything the generator needs. Weights must sum to 100 over the CA
// (non-Exam) items and to 100 over the Exam items of each presentation,
// whenever that group is non-empty.
struct SynthSpec {
    std::uint64_t seed = 42;
    int n_students = 50;
    std::vector<SynthPresentation> presentations;
    int n_sites = 12;                          // per presentation
    std::vector<std::string> activity_types;   // alphabet to draw from
    double click_density = 0.2;                // P(student active on a day)
    double withdrawal_rate = 0.1;
    double repeat_rate = 0.1;
};

// A presentation with the DDD-2013J-like shape used by most tests.
SynthSpec default_synth_spec();

// Ground-truth aggregates accumulated during generation, keyed by
// (module, presentation, student id).
struct SynthStudentTruth {
    std::map<int, long long> clicks_by_day;
    std::map<int, long long> clicks_by_week;
    std::map<std::string, long long> clicks_by_type;
    std::optional<double> weighted_ca_zero;  // zero policy over all CA items
};

struct SynthResult {
    RawTables tables;
    std::map<std::tuple<std::string, std::string, std::string>, SynthStudentTruth> truth;
};

// Deterministic for a fixed spec; output always satisfies the RawTables
// invariants. Invalid spec -> SpecError.
SynthResult generate_synthetic(const SynthSpec& spec);

}  // namespace oulad
