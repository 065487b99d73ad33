#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace ballpark::cli {

struct RunConfig {
    std::string command;        // meb, diameter, width, profile, certify,
                                // simplex, regular, radii-table, partition
    std::string input_path;
    bool json = false;
    std::uint64_t seed = 0;
    double rel_eps = 1e-9;
    double abs_eps = 1e-12;
    std::size_t cutoff = 30;

    std::string certify_suite;   // jung, steinhagen, variant-jung,
                                 // eggleston, perelman-pukhov
    std::string partition_kind;  // radon, tverberg, caratheodory,
                                 // nd-caratheodory, nd-tverberg
    std::size_t parts = 2;       // --p
    std::size_t groups = 2;      // --k
    std::size_t subset = 1;      // --r
    std::string point_text;      // --point "x,y,..."

    std::size_t dim = 2;         // regular / radii-table
    double diam = 1.0;           // regular
    std::string polytope = "simplex";  // radii-table --kind
};

// Exit codes: 0 success, 1 a certified bound failed to hold, 2 bad input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// argv front end; parses flags into a RunConfig and dispatches to run().
int main_impl(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ballpark::cli
