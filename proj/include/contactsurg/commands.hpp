#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace contactsurg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,        // bad arguments or unreadable / unwritable files
  kInvalid = 2,      // parse or validation error
  kCertificate = 3,  // a certificate clause failed
};

struct ConvertOptions {
  std::optional<std::string> policy;  // overrides the file's options.policy
  bool enumerate = false;
  bool json = false;
  std::optional<std::filesystem::path> out_dir;
};

int cmd_invariants(const std::string& path, bool json, std::ostream& out, std::ostream& err);
int cmd_front_invariants(const std::string& front_json, bool json, std::ostream& out, std::ostream& err);
int cmd_convert(const std::string& path, const ConvertOptions& options, std::ostream& out, std::ostream& err);
int cmd_cf(const std::string& r, bool json, std::ostream& out, std::ostream& err);
int cmd_slope(const std::string& r, bool json, std::ostream& out, std::ostream& err);
int cmd_count(const std::string& r, bool json, std::ostream& out, std::ostream& err);
int cmd_homology(const std::string& path, bool json, std::ostream& out, std::ostream& err);

/// Accepts a result file (one or many diagrams) or a diagram file, which is
/// converted with its own options first.
int cmd_verify(const std::string& path, bool json, std::ostream& out, std::ostream& err);

}  // namespace contactsurg::cli
