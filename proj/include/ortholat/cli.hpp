#pragma once

#include <cstdint>
#include <string>

#include "ortholat/report.hpp"

namespace ortholat {

// Every command returns its exit code (0 clean, 1 law violations or failed
// trials, 2 input or usage errors) plus both renderings of the result. The
// JSON form is stable: same inputs, byte-identical dump.
struct CmdResult {
  int exit_code = 0;
  Json json;
  std::string text;
};

CmdResult cmd_check(const std::string& path);
CmdResult cmd_gen(const std::string& kind, unsigned m, unsigned atoms);
CmdResult cmd_decompose(const std::string& path);
CmdResult cmd_regular(const std::string& path, bool enumerate);
CmdResult cmd_subspace(unsigned dim, std::uint64_t trials, std::uint64_t seed,
                       const std::string& suite);

// The same commands on in-memory file text, for embedding.
CmdResult cmd_check_text(const std::string& text);
CmdResult cmd_decompose_text(const std::string& text);
CmdResult cmd_regular_text(const std::string& text, bool enumerate);

}  // namespace ortholat
