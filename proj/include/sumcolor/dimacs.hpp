#ifndef SUMCOLOR_DIMACS_HPP
#define SUMCOLOR_DIMACS_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sumcolor/graph.hpp"

namespace sumcolor {

class DimacsError : public std::runtime_error {
public:
    DimacsError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// DIMACS .col: `c` comments, one `p edge <n> <m>` line, `e <u> <v>` edge
// lines with 1-based endpoints.  Duplicate edges and both orientations
// collapse; self-loops and malformed input raise DimacsError with the
// offending line number.  The `n` of the problem line is authoritative,
// so isolated vertices survive.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs_file(const std::string& path);

// `p edge n m` followed by `e u v` lines, 1-based, u < v, sorted.
std::string serialize_dimacs(const Graph& g);

} // namespace sumcolor

#endif
