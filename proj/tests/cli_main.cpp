// Test runner for the CLI suite: argv[1] is the corecluster binary under
// test; remaining arguments pass through to doctest.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

std::string g_cli_binary;

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-corecluster-binary> [doctest args]\n");
    return 1;
  }
  g_cli_binary = argv[1];

  std::vector<char*> args;
  args.push_back(argv[0]);
  for (int i = 2; i < argc; ++i) args.push_back(argv[i]);

  doctest::Context context(static_cast<int>(args.size()), args.data());
  return context.run();
}
