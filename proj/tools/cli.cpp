#include "cli.hpp"
#include <ostream>
namespace isoverify::cli {
int run(const std::vector<std::string>&, std::ostream&, std::ostream& err) {
    err << "not yet implemented\n";
    return 4;
}
}  // namespace isoverify::cli
