#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mw {

// Exit codes shared by every command: 0 all requested claims hold,
// 1 a claim failed, 2 unusable input.
inline constexpr int kExitPass = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitInputError = 2;

struct ConstructOptions {
  std::string spec;
  std::string format = "json";  // json | graph6 | dot
  bool with_embedding = false;
  std::string out_path;  // empty writes to the stream
};

struct VerifyOptions {
  std::string input;  // family spec string, or a graph6/json file path
  std::vector<std::string> checks;  // empty = all five
  std::string embedding_path;       // embedding json for the quad check
  bool contraction_sweep = false;   // report chi after every contraction
  std::string out_path;
};

struct SweepOptions {
  std::string family;  // plane | grotzsch | projective
  int sections = 3;
  int max_order = 3;
  int central_order = 1;
  int cap = 25;
  bool allow_large = false;
  int jobs = 1;
  std::string format = "table";  // table | csv | json
  std::string out_path;
};

struct EmbedCheckOptions {
  std::string path;  // embedding json
};

struct MinorOptions {
  std::string pattern;    // O | O- | K4 | K5 | K33 | file path
  std::string host_path;  // graph file or family spec
  std::string out_path;
};

int cmd_construct(const ConstructOptions& options, std::ostream& out,
                  std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err);
int cmd_sweep(const SweepOptions& options, std::ostream& out,
              std::ostream& err);
int cmd_embed_check(const EmbedCheckOptions& options, std::ostream& out,
                    std::ostream& err);
int cmd_minor(const MinorOptions& options, std::ostream& out,
              std::ostream& err);

}  // namespace mw
