#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charseq::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 domain error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct OperationRoute {
  std::string operation;   // library function
  std::string subcommand;
  std::string selector;    // flags choosing the operation inside the subcommand
};

/// Which subcommand reaches each library operation.
const std::vector<OperationRoute>& operation_routes();

/// The subcommand names, in help order.
const std::vector<std::string>& subcommands();

}  // namespace charseq::cli
