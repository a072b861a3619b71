#include "kn/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kn/enumerate.hpp"
#include "kn/keys.hpp"
#include "kn/sjdt.hpp"
#include "kn/text_io.hpp"

namespace kn {

namespace {

SkewTableau load_tableau(const std::string& path, int rank) {
  if (path == "-") return parse_tableau(std::cin, rank);
  std::ifstream in(path);
  if (!in) fail(Err::parse_error, "cannot open " + path);
  return parse_tableau(in, rank);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      fail(Err::parse_error, "bad integer \"" + item + "\" in list");
    }
  }
  return out;
}

void print_tableau(std::ostream& out, const SkewTableau& t, bool json,
                   bool bars) {
  if (json)
    out << tableau_json(t).dump() << "\n";
  else if (!t.empty() || t.shape().num_rows() > 0)
    out << format_tableau(t, bars) << "\n";
}

nlohmann::json trace_json(const SlideTrace& trace) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SlideStep& s : trace) {
    nlohmann::json j;
    j["puncture"] = {s.puncture.row, s.puncture.col};
    j["kind"] = to_string(s.kind);
    j["entry"] = s.moved.value;
    if (s.erased) j["erased"] = *s.erased;
    arr.push_back(std::move(j));
  }
  return arr;
}

void print_trace(std::ostream& out, const SlideTrace& trace) {
  for (const SlideStep& s : trace) {
    out << "(" << s.puncture.row << "," << s.puncture.col << ") "
        << to_string(s.kind) << " " << to_string(s.moved);
    if (s.erased) out << " erased " << *s.erased;
    out << "\n";
  }
}

struct EquivalenceSummary {
  long shapes = 0;
  long tableaux = 0;
  long mismatches = 0;
};

EquivalenceSummary run_equivalence(int n, int max_cells) {
  EquivalenceSummary sum;
  for (const Partition& lambda : partitions_up_to(max_cells, n)) {
    ++sum.shapes;
    for_each_kn(lambda, n, [&](const SkewTableau& t) {
      ++sum.tableaux;
      if (right_key(t, KeyMethod::direct) != right_key(t, KeyMethod::jdt))
        ++sum.mismatches;
    });
  }
  return sum;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Type C Kashiwara-Nakashima tableaux, symplectic jeu de "
               "taquin, and right keys",
               "kntab"};
  app.require_subcommand(1);

  int rank = 0;
  bool json = false, bars = false;
  std::string file;

  auto add_common = [&](CLI::App* cmd, bool with_file) {
    cmd->add_option("-n,--rank", rank, "alphabet rank n")->required();
    cmd->add_flag("--json", json, "machine-readable output");
    cmd->add_flag("--bars", bars, "render barred letters with overbars");
    if (with_file)
      cmd->add_option("file", file, "tableau file (\"-\" for stdin)")
          ->required();
  };

  auto* validate = app.add_subcommand("validate", "check a tableau file");
  add_common(validate, true);

  auto* split_cmd = app.add_subcommand("split", "print the split form");
  add_common(split_cmd, true);

  auto* weight_cmd = app.add_subcommand("weight", "print the weight vector");
  add_common(weight_cmd, true);

  bool with_trace = false;
  auto* rectify_cmd = app.add_subcommand("rectify", "rectify a skew tableau");
  add_common(rectify_cmd, true);
  rectify_cmd->add_flag("--trace", with_trace, "log every elementary slide");

  std::string perm_arg;
  auto* variant_cmd = app.add_subcommand(
      "skew-variant", "skew tableau for a permutation of column lengths");
  add_common(variant_cmd, true);
  variant_cmd
      ->add_option("--perm", perm_arg, "target column lengths, e.g. 1,2,3")
      ->required();

  std::string method_arg = "direct";
  bool column_only = false;
  auto* key_cmd = app.add_subcommand("right-key", "right key tableau");
  add_common(key_cmd, true);
  key_cmd->add_option("--method", method_arg, "jdt or direct")
      ->check(CLI::IsMember({"jdt", "direct"}));
  key_cmd->add_flag("--column-only", column_only,
                    "print only the first key column");

  std::string vector_arg;
  auto* kfv_cmd =
      app.add_subcommand("key-from-vector", "key tableau of a given weight");
  add_common(kfv_cmd, false);
  kfv_cmd->add_option("vector", vector_arg, "weight entries, e.g. -3,-1,2")
      ->required();

  std::string shape_arg;
  bool count_only = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "list KN(λ, n)");
  add_common(enum_cmd, false);
  enum_cmd->add_option("--shape", shape_arg, "partition, e.g. 2,2,1")
      ->required();
  enum_cmd->add_flag("--count-only", count_only, "print only the count");

  int max_cells = 0;
  auto* equiv_cmd = app.add_subcommand(
      "check-equivalence",
      "verify that both right key methods agree on every tableau");
  add_common(equiv_cmd, false);
  equiv_cmd->add_option("--max-cells", max_cells, "largest shape size")
      ->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate) {
      SkewTableau t = load_tableau(file, rank);
      KnReport rep = check_kn(t);
      if (json) {
        nlohmann::json j;
        j["valid"] = rep.ok;
        if (!rep.ok) j["reason"] = rep.reason;
        out << j.dump() << "\n";
      } else {
        out << (rep.ok ? "valid" : "invalid: " + rep.reason) << "\n";
      }
      return rep.ok ? 0 : 1;
    }
    if (*split_cmd) {
      print_tableau(out, split_form(load_tableau(file, rank)), json, bars);
      return 0;
    }
    if (*weight_cmd) {
      SkewTableau t = load_tableau(file, rank);
      if (json)
        out << tableau_json(t).dump() << "\n";
      else
        out << format_weight(weight(t)) << "\n";
      return 0;
    }
    if (*rectify_cmd) {
      SlideTrace trace;
      SkewTableau r =
          rectify(load_tableau(file, rank), with_trace ? &trace : nullptr);
      if (json) {
        nlohmann::json j = tableau_json(r);
        if (with_trace) j["trace"] = trace_json(trace);
        out << j.dump() << "\n";
      } else {
        if (with_trace) print_trace(out, trace);
        out << format_tableau(r, bars) << "\n";
      }
      return 0;
    }
    if (*variant_cmd) {
      print_tableau(out,
                    skew_variant(load_tableau(file, rank),
                                 parse_int_list(perm_arg)),
                    json, bars);
      return 0;
    }
    if (*key_cmd) {
      SkewTableau t = load_tableau(file, rank);
      KeyMethod method =
          method_arg == "jdt" ? KeyMethod::jdt : KeyMethod::direct;
      if (column_only) {
        Column col = method == KeyMethod::jdt ? right_key_column_jdt(t)
                                              : right_key_column_direct(t);
        if (json) {
          nlohmann::json j;
          nlohmann::json letters = nlohmann::json::array();
          for (Letter a : col.letters) letters.push_back(a.value);
          j["column"] = std::move(letters);
          out << j.dump() << "\n";
        } else {
          std::string line;
          for (Letter a : col.letters) {
            if (!line.empty()) line += " ";
            line += bars ? to_string_bars(a) : to_string(a);
          }
          out << line << "\n";
        }
      } else {
        print_tableau(out, right_key(t, method), json, bars);
      }
      return 0;
    }
    if (*kfv_cmd) {
      print_tableau(out, key_from_vector(parse_int_list(vector_arg), rank),
                    json, bars);
      return 0;
    }
    if (*enum_cmd) {
      Partition lambda(parse_int_list(shape_arg));
      if (count_only) {
        long count = 0;
        for_each_kn(lambda, rank, [&](const SkewTableau&) { ++count; });
        if (json)
          out << nlohmann::json{{"count", count}}.dump() << "\n";
        else
          out << count << "\n";
        return 0;
      }
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for_each_kn(lambda, rank, [&](const SkewTableau& t) {
          arr.push_back(tableau_json(t));
        });
        out << nlohmann::json{{"count", arr.size()}, {"tableaux", arr}}.dump()
            << "\n";
      } else {
        long count = 0;
        for_each_kn(lambda, rank, [&](const SkewTableau& t) {
          out << format_tableau(t, bars) << "\n\n";
          ++count;
        });
        out << count << " tableaux\n";
      }
      return 0;
    }
    if (*equiv_cmd) {
      EquivalenceSummary sum = run_equivalence(rank, max_cells);
      if (json) {
        out << nlohmann::json{{"shapes", sum.shapes},
                              {"tableaux", sum.tableaux},
                              {"mismatches", sum.mismatches}}
                   .dump()
            << "\n";
      } else {
        out << "checked " << sum.tableaux << " tableaux over " << sum.shapes
            << " shapes: " << sum.mismatches << " mismatches\n";
      }
      return sum.mismatches == 0 ? 0 : 1;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace kn
