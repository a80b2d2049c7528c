#ifndef RANKAX_ERRORS_HPP
#define RANKAX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rankax {

// Lookup of a node id that is not present in the graph.
class NodeNotFoundError : public std::out_of_range {
public:
    explicit NodeNotFoundError(const std::string& id)
        : std::out_of_range("node not found: " + id), node_(id) {}
    const std::string& node() const noexcept { return node_; }

private:
    std::string node_;
};

// A transform or axiom precondition does not hold; the message carries the evidence.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A measure was evaluated outside its admissible graph class.
class ClassViolationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An iterative numeric routine failed to converge; carries the last residual.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double residual)
        : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
          residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// Random graph generation exhausted its rejection budget.
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rankax

#endif
