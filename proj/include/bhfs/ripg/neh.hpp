#pragma once

#include <bhfs/pareto/archive.hpp>
#include <bhfs/ripg/evaluator.hpp>

namespace bhfs {

/// NEH insertion heuristic: jobs by non-increasing total processing time (ties: lower index),
/// each inserted at the position of the growing partial sequence that minimises `criterion`
/// (ties: earliest position).
Permutation neh(Evaluator& eval, Criterion criterion);

inline Permutation neh_makespan(Evaluator& eval) { return neh(eval, Criterion::Makespan); }
inline Permutation neh_tec(Evaluator& eval) { return neh(eval, Criterion::Energy); }
Permutation neh_makespan(const Instance& instance);
Permutation neh_tec(const Instance& instance);

/// Archive seeded with the makespan-oriented and the energy-oriented NEH solutions.
ParetoArchive initialize(Evaluator& eval);
ParetoArchive initialize(const Instance& instance);

}  // namespace bhfs
