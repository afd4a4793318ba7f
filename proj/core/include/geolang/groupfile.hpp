#pragma once

// INI-style group and generating-set files.
//
//   [group]
//   kind = zm_semidirect      # table | presentation | zn_c2 | bs12 |
//   n = 5                     # zm_semidirect | product | extension
//   s = 3
//   t_order = inf
//
//   [genset]
//   u = a t
//
// Keys may repeat (relator, gen, action); order is kept. Paths are relative
// to the file that names them.

#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "geolang/engine.hpp"
#include "geolang/geodesics.hpp"
#include "geolang/presentation.hpp"
#include "geolang/table.hpp"

namespace geolang {

  using IniEntries = std::vector<std::pair<std::string, std::string>>;

  struct IniFile {
    std::vector<std::pair<std::string, IniEntries>> sections;

    IniEntries const* section(std::string const& name) const;
  };

  IniFile parse_ini(std::istream& in, std::string const& origin);
  IniFile read_ini(std::filesystem::path const& path);

  struct LoadedGroup {
    EnginePtr engine;
    TablePtr table;  // set for finite groups given as tables or presentations
  };

  LoadedGroup load_group(std::filesystem::path const& path);
  LoadedGroup load_group(IniFile const& file, std::filesystem::path const& dir);

  // The [genset] section of `path`, validated against the group.
  GenSet load_genset(LoadedGroup const& g, std::filesystem::path const& path);

  struct PresentationFile {
    Presentation presentation;
    std::size_t cap;
  };
  // [presentation] (or [group] with kind = presentation) section.
  PresentationFile load_presentation(std::filesystem::path const& path);

}  // namespace geolang
