#pragma once

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace colorweyl {

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;

// All fallible constructions throw Error; `code` is a stable machine-readable tag
// (e.g. "NOT_ASSOCIATIVE"), `what()` carries the witness description.
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& detail)
        : std::runtime_error(c + ": " + detail), code(std::move(c)) {}
};

enum class Status { certified_true, certified_false, evidence };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::certified_true: return "certified_true";
        case Status::certified_false: return "certified_false";
        default: return "evidence";
    }
}

struct Witness {
    std::string kind;    // "seed", "pair", "kernel_vector", ...
    std::string detail;  // printed over named basis
};

// Tri-state outcome shared across the artifact. certified_false always carries
// a witness; evidence carries the trial count that was exhausted.
struct Verdict {
    Status status = Status::evidence;
    std::optional<Witness> witness;
    long trials = 0;

    bool ok() const { return status == Status::certified_true; }
    static Verdict yes() { return {Status::certified_true, std::nullopt, 0}; }
    static Verdict no(Witness w) { return {Status::certified_false, std::move(w), 0}; }
    static Verdict maybe(long trials) { return {Status::evidence, std::nullopt, trials}; }
};

}  // namespace colorweyl
