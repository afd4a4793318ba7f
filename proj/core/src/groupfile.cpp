#include "geolang/groupfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "geolang/catalog.hpp"
#include "geolang/engines.hpp"
#include "geolang/errors.hpp"

namespace geolang {

  namespace {

    std::string trim(std::string_view s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return {};
      }
      auto e = s.find_last_not_of(" \t\r");
      return std::string(s.substr(b, e - b + 1));
    }

    std::string const* find(IniEntries const& e, std::string const& key) {
      for (auto const& [k, v] : e) {
        if (k == key) {
          return &v;
        }
      }
      return nullptr;
    }

    std::string const& need(IniEntries const& e, std::string const& key) {
      auto v = find(e, key);
      if (!v) {
        throw InputError("missing key: " + key);
      }
      return *v;
    }

    std::vector<std::string> all(IniEntries const& e, std::string const& key) {
      std::vector<std::string> out;
      for (auto const& [k, v] : e) {
        if (k == key) {
          out.push_back(v);
        }
      }
      return out;
    }

    std::uint64_t to_uint(std::string const& text, std::string const& key) {
      std::uint64_t v = 0;
      auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || p != text.data() + text.size()) {
        throw InputError("bad value for " + key + ": " + text);
      }
      return v;
    }

    std::vector<std::string> split_ws(std::string const& s) {
      std::istringstream in(s);
      std::vector<std::string> out;
      std::string t;
      while (in >> t) {
        out.push_back(t);
      }
      return out;
    }

    Phi parse_phi(std::string const& text) {
      auto parts = split_ws(text);
      if (parts.size() == 2 && parts[0] == "invert") {
        return Phi::invert(to_uint(parts[1], "phi"));
      }
      if (parts.size() == 3 && parts[0] == "swap") {
        return Phi::swap(to_uint(parts[1], "phi"), to_uint(parts[2], "phi"));
      }
      throw InputError("bad phi: " + text);
    }

    TablePtr read_table(std::filesystem::path const& path,
                        IniEntries const& e) {
      std::ifstream in(path);
      if (!in) {
        throw InputError("cannot open " + path.string());
      }
      std::size_t order = 0;
      auto mult = FiniteGroupTable::read_mult(in, order);
      std::vector<TableGenerator> gens;
      for (auto const& g : all(e, "gen")) {
        auto parts = split_ws(g);
        if (parts.size() != 2) {
          throw InputError("bad gen line: " + g);
        }
        gens.push_back(
            {parts[0], static_cast<Element>(to_uint(parts[1], "gen"))});
      }
      return std::make_shared<FiniteGroupTable const>(order, std::move(mult),
                                                      std::move(gens));
    }

    Presentation presentation_from(IniEntries const& e) {
      return Presentation(split_ws(need(e, "generators")), all(e, "relator"));
    }

  }  // namespace

  IniEntries const* IniFile::section(std::string const& name) const {
    for (auto const& [n, e] : sections) {
      if (n == name) {
        return &e;
      }
    }
    return nullptr;
  }

  IniFile parse_ini(std::istream& in, std::string const& origin) {
    IniFile f;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto where = origin + ":" + std::to_string(lineno);
      auto hash = line.find('#');
      if (hash != std::string::npos) {
        line.erase(hash);
      }
      std::string t = trim(line);
      if (t.empty() || t[0] == ';') {
        continue;
      }
      if (t.front() == '[') {
        if (t.back() != ']') {
          throw InputError(where + ": bad section header");
        }
        f.sections.push_back({trim(t.substr(1, t.size() - 2)), {}});
        continue;
      }
      auto eq = t.find('=');
      if (eq == std::string::npos || f.sections.empty()) {
        throw InputError(where + ": expected key = value");
      }
      f.sections.back().second.emplace_back(trim(t.substr(0, eq)),
                                            trim(t.substr(eq + 1)));
    }
    return f;
  }

  IniFile read_ini(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open " + path.string());
    }
    return parse_ini(in, path.string());
  }

  LoadedGroup load_group(std::filesystem::path const& path) {
    return load_group(read_ini(path), path.parent_path());
  }

  LoadedGroup load_group(IniFile const& file,
                         std::filesystem::path const& dir) {
    auto const* e = file.section("group");
    if (!e) {
      throw InputError("missing [group] section");
    }
    std::string const& kind = need(*e, "kind");
    LoadedGroup g;
    if (kind == "table") {
      g.table = read_table(dir / need(*e, "file"), *e);
    } else if (kind == "presentation") {
      auto cap = find(*e, "cap");
      auto p = presentation_from(*e);
      g.table = presentation_table(
          p.generators, all(*e, "relator"),
          cap ? to_uint(*cap, "cap") : default_coset_cap);
    } else if (kind == "zn_c2") {
      g.engine = std::make_shared<ZnC2Engine const>(
          to_uint(need(*e, "n"), "n"), parse_phi(need(*e, "phi")));
    } else if (kind == "bs12") {
      g.engine = std::make_shared<BS12Engine const>();
    } else if (kind == "zm_semidirect") {
      std::optional<std::uint64_t> m;
      auto t = find(*e, "t_order");
      if (t && *t != "inf") {
        m = to_uint(*t, "t_order");
      }
      auto normal = find(*e, "normal");
      auto acting = find(*e, "acting");
      g.engine = std::make_shared<ZmSemidirectEngine const>(
          to_uint(need(*e, "n"), "n"), to_uint(need(*e, "s"), "s"), m,
          normal ? *normal : "a", acting ? *acting : "t");
    } else if (kind == "product") {
      auto left = load_group(dir / need(*e, "left"));
      auto right = load_group(dir / need(*e, "right"));
      g.engine = std::make_shared<ProductEngine const>(left.engine,
                                                       right.engine);
    } else if (kind == "extension") {
      auto base = load_group(dir / need(*e, "base"));
      TablePtr h = base.table;
      if (!h) {
        if (!base.engine->finite()) {
          throw InputError("extension base must be finite");
        }
        h = std::make_shared<FiniteGroupTable const>(
            table_from_engine(*base.engine));
      }
      std::vector<std::vector<Element>> actions;
      for (auto const& a : all(*e, "action")) {
        actions.push_back(parse_cycles(a, h->order()));
      }
      g.engine = std::make_shared<ExtensionEngine const>(
          h, to_uint(need(*e, "rank"), "rank"), std::move(actions));
    } else {
      throw InputError("unknown group kind: " + kind);
    }
    if (g.table) {
      g.engine = table_engine(g.table, kind);
    }
    return g;
  }

  GenSet load_genset(LoadedGroup const& g, std::filesystem::path const& path) {
    auto f = read_ini(path);
    auto const* e = f.section("genset");
    if (!e) {
      throw InputError(path.string() + ": missing [genset] section");
    }
    return validate_genset(g.engine, gen_specs(*g.engine, *e));
  }

  PresentationFile load_presentation(std::filesystem::path const& path) {
    auto f = read_ini(path);
    auto const* e = f.section("presentation");
    if (!e) {
      e = f.section("group");
    }
    if (!e) {
      throw InputError(path.string() + ": missing [presentation] section");
    }
    auto cap = find(*e, "cap");
    return {presentation_from(*e),
            cap ? to_uint(*cap, "cap") : default_coset_cap};
  }

}  // namespace geolang
