#pragma once

#include "bullcol/graph.hpp"
#include "bullcol/kinds.hpp"
#include "bullcol/oracle.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace bullcol {

inline constexpr int kExitColourable = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;
inline constexpr int kExitNotColourable = 10;
inline constexpr int kExitNotInClass = 20;

struct SolveArgs {
    std::string input;               // "-" reads stdin
    ClassMode mode = ClassMode::bull_e;
    std::optional<GraphFormat> format; // guessed from the extension when unset
    std::string out;                 // certificate path; empty writes nothing
    bool validate_class = true;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& input, const std::string& certificate, std::optional<GraphFormat> format,
               std::ostream& out, std::ostream& err);
int cmd_oracle(const std::string& input, std::optional<GraphFormat> format, int cap, std::ostream& out,
               std::ostream& err);
int cmd_gen(const GenerateRequest& req, GraphFormat format, const std::string& path, std::ostream& out,
            std::ostream& err);

/// Entry point of the bullcol tool: subcommands solve, verify, oracle, gen.
int run_cli(int argc, char** argv);

} // namespace bullcol
