#pragma once

#include <ostream>

namespace gkm {

// gkmtool entry point: 0 ok, 1 verification failure, 2 usage error
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gkm
