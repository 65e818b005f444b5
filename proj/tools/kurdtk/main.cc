// Copyright 2026 The kurdtk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// kurdtk: command-line front end of the toolkit.
//
// Exit status: 0 success, 1 usage error, 2 data error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.h"
#include "kurdtk/error.h"

int main(int argc, char** argv) {
  using namespace kurdtk;
  CLI::App app{"kurdtk: corpus, transliteration and language-identification "
               "toolkit for Kurdish varieties",
               "kurdtk"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
  std::string format = "text";
  app.add_option("--config", config_path, "key = value configuration file")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "seed for every random choice");
  app.add_flag("-q,--quiet", quiet, "suppress progress and summaries");
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "records"}));

  cli::Registry registry;
  cli::add_text_commands(app, registry);
  cli::add_stats_commands(app, registry);
  cli::add_lid_commands(app, registry);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "kurdtk: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    cli::Context ctx;
    ctx.config = default_config();
    if (!config_path.empty()) apply_config_file(ctx.config, config_path);
    if (seed) {
      ctx.config.seed = *seed;
      ctx.config.lid.seed = *seed;
    }
    check_config_files(ctx.config);
    ctx.quiet = quiet;
    ctx.records = format == "records";
    const CLI::App* sub = app.get_subcommands().front();
    registry.at(sub)(ctx);
  } catch (const InvalidArgument& e) {
    std::cerr << "kurdtk: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "kurdtk: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "kurdtk: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
