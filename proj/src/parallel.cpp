#include "slepian/parallel.hpp"

#include <atomic>

#include "slepian/error.hpp"

namespace slepian {
namespace {
std::atomic<int> g_threads{1};
}

void set_num_threads(int n) {
  require(n >= 1, ErrorCode::InvalidArgument, "thread count must be >= 1");
  g_threads.store(n);
}

int num_threads() { return g_threads.load(); }

}  // namespace slepian
