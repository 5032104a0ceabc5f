#pragma once

#include <CLI11.hpp>

namespace ecdlp::cli {

/// Reads `key = value` files (with # comments) or the JSON written by
/// --manifest, whose "config" object mirrors the flags. Keys are routed to
/// the subcommand that was selected on the command line, so files stay flat.
class FlatConfig : public CLI::ConfigINI {
 public:
  explicit FlatConfig(const CLI::App* app) : app_(app) {}

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;

 private:
  const CLI::App* app_;
};

}  // namespace ecdlp::cli
