// Command-line front end: per-word queries, commutation classes and the
// classification table, printed as JSON (default) or plain text.

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "strpoly/serialize.hpp"

using namespace strpoly;

namespace {

struct Options {
  std::string word;
  std::string lambda;
  std::string delta;
  std::string coords = "m";
  int n = 0;
  bool mod_involution = false;
  bool text = false;
  bool vertices = false;
  std::string out;
};

struct TableRow {
  ReducedWord word;
  ReducedWord representative;
  Delta delta;
  IndexVector index;
  bool small = false;
  int gp_count = 0;
};

Weight parse_weight(const Options& o, int n) {
  if (o.lambda.empty()) return Weight(n, 2);
  Weight w = parse_ints(o.lambda);
  if (static_cast<int>(w.size()) != n) throw Error("BadWeightLength", "--lambda needs " + std::to_string(n) + " entries");
  return w;
}

ReducedWord need_word(const Options& o) {
  if (o.word.empty()) throw Error("MissingWord", "--word is required");
  return parse_word(o.word);
}

// Witness shown for a class: the small witness if any, otherwise the delta
// whose index vector has the most leading zeros (then smallest vector).
std::pair<Delta, IndexVector> table_witness(const ReducedWord& w, const SmallIndices& s) {
  if (s.witness) {
    return {s.witness->delta, delta_index(w, s.witness->delta)};
  }
  std::optional<std::pair<Delta, IndexVector>> best;
  auto zeros = [](const IndexVector& I) {
    return static_cast<int>(std::find_if(I.begin(), I.end(), [](int x) { return x != 0; }) - I.begin());
  };
  for (long mask = 0; mask < (1L << w.n); ++mask) {
    Delta d(w.n);
    for (int i = 0; i < w.n; ++i) d[i] = (mask >> (w.n - 1 - i)) & 1 ? Bullet::A : Bullet::D;
    IndexVector I = delta_index(w, d);
    if (!best || zeros(I) > zeros(best->second) || (zeros(I) == zeros(best->second) && I < best->second))
      best = {{d, I}};
  }
  return *best;
}

std::vector<TableRow> table_rows(int n, bool mod_involution) {
  std::vector<CommutationClass> classes = commutation_classes(n);
  std::vector<const ReducedWord*> todo;
  for (const CommutationClass& c : classes) {
    const ReducedWord& rep = c.representative;
    if (mod_involution) {
      const ReducedWord image = apply_involution(rep);
      auto it = std::find_if(classes.begin(), classes.end(),
                             [&](const CommutationClass& o) { return same_commutation_class(o.representative, image); });
      if (it != classes.end() && it->representative < rep) continue;
    }
    todo.push_back(&rep);
  }
  // Rows are independent; workers fill their slots and the output keeps the
  // class order.
  std::vector<TableRow> rows(todo.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      try {
        TableRow& r = rows[i];
        r.word = *todo[i];
        r.representative = *todo[i];
        const SmallIndices s = has_small_indices(r.word);
        r.small = s.small;
        std::tie(r.delta, r.index) = table_witness(r.word, s);
        r.gp_count = static_cast<int>(enumerate_rigorous_paths(r.word).size());
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(hw, todo.size()); ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

Json row_json(const TableRow& r) {
  Json j;
  j["word"] = r.word.str();
  j["class_representative"] = r.representative.str();
  j["delta_witness"] = delta_to_string(r.delta);
  j["index_vector"] = r.index;
  j["small"] = r.small;
  j["gp_count"] = r.gp_count;
  return j;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s += std::string(w - s.size(), ' ');
  return s;
}

std::string run(const std::string& cmd, const Options& o) {
  std::ostringstream os;
  if (cmd == "paths") {
    const ReducedWord w = need_word(o);
    const auto paths = enumerate_rigorous_paths(w);
    if (!o.text) return paths_json(w, paths).dump() + "\n";
    os << "word " << w.str() << ": " << paths.size() << " rigorous paths\n";
    for (const RigorousPath& p : paths)
      os << pad(p.str(), 24) << " peak t" << p.max_peak << "  w = (" << join_ints(p.w_m) << ")\n";
    return os.str();
  }
  if (cmd == "polytope") {
    const ReducedWord w = need_word(o);
    const HPolytope p = string_polytope(w, parse_weight(o, w.n), parse_coords(o.coords));
    Json j = to_json(p);
    std::optional<VertexSet> vs;
    if (o.vertices) {
      vs = vertices(p);
      j["vertices"] = to_json(*vs);
    }
    if (!o.text) return j.dump() + "\n";
    for (int r = 0; r < p.rows(); ++r) {
      os << "(";
      for (int c = 0; c < p.d; ++c) os << (c ? "," : "") << q_to_string(p.A[r][c]);
      os << ") . x + " << q_to_string(p.b[r]) << " >= 0   [" << p.row_tags[r] << "]\n";
    }
    if (vs) {
      os << vs->vertices.size() << " vertices" << (vs->integral ? " (integral)" : "") << "\n";
      for (const QVec& v : vs->vertices) {
        os << "  (";
        for (std::size_t c = 0; c < v.size(); ++c) os << (c ? "," : "") << q_to_string(v[c]);
        os << ")\n";
      }
    }
    return os.str();
  }
  if (cmd == "index") {
    const ReducedWord w = need_word(o);
    if (o.delta.empty()) throw Error("BadDelta", "--delta is required");
    const Delta d = parse_delta(o.delta);
    const IndexVector I = delta_index(w, d);
    if (o.text) return "ind_" + delta_to_string(d) + "(" + w.str() + ") = (" + join_ints(I) + ")\n";
    Json j;
    j["word"] = w.str();
    j["delta"] = delta_to_string(d);
    j["index"] = I;
    return j.dump() + "\n";
  }
  if (cmd == "small") {
    const ReducedWord w = need_word(o);
    const SmallIndices s = has_small_indices(w);
    if (o.text) {
      os << w.str() << ": " << (s.small ? "small indices" : "not small");
      if (s.witness) os << " (delta " << delta_to_string(s.witness->delta) << ", k = " << s.witness->k << ")";
      return os.str() + "\n";
    }
    Json j = to_json(s);
    j["word"] = w.str();
    return j.dump() + "\n";
  }
  if (cmd == "bott") {
    const BottData b = bott_data(need_word(o));
    if (!o.text) return bott_json(b).dump() + "\n";
    for (std::size_t j = 0; j < b.v.size(); ++j)
      os << "v" << j + 1 << " = (" << join_ints(b.v[j]) << ")   w" << j + 1 << " = (" << join_ints(b.w[j]) << ")\n";
    return os.str();
  }
  if (cmd == "resolve") {
    const ReducedWord w = need_word(o);
    const ResolutionVerdict v = verify_small_resolution(w, parse_weight(o, w.n));
    if (!o.text) return to_json(v).dump() + "\n";
    os << "word " << w.str() << ": " << v.status << "\n";
    os << "  smooth " << v.smooth << ", rays_match " << v.rays_match << ", bpf " << v.bpf << "\n";
    if (v.violation) {
      os << "  violation {";
      const auto mem = ray_members(v.violation->collection);
      for (std::size_t i = 0; i < mem.size(); ++i) os << (i ? ", " : "") << v.ray_labels[mem[i]];
      os << "}: " << terms_string(v.violation->lhs_terms) << " vs " << terms_string(v.violation->rhs_terms) << "\n";
    }
    return os.str();
  }
  if (cmd == "potential") {
    const LaurentPotential p = disk_potential(need_word(o));
    return render(p, o.text ? "text" : "json") + "\n";
  }
  if (cmd == "classes") {
    for (const CommutationClass& c : commutation_classes(o.n)) {
      if (o.text) {
        os << c.representative.str() << "  (" << c.members.size() << " words)\n";
      } else {
        Json j;
        j["representative"] = c.representative.str();
        j["size"] = c.members.size();
        os << j.dump() << "\n";
      }
    }
    return os.str();
  }
  if (cmd == "table") {
    for (const TableRow& r : table_rows(o.n, o.mod_involution)) {
      if (o.text) {
        os << pad(r.word.str(), 2 * nbar(o.n) + 2) << pad(delta_to_string(r.delta), o.n + 2) << pad("(" + join_ints(r.index) + ")", 2 * o.n + 6)
           << pad(r.small ? "small" : "-", 7) << r.gp_count << "\n";
      } else {
        os << row_json(r).dump() << "\n";
      }
    }
    return os.str();
  }
  throw Error("UnknownCommand", "unknown command " + cmd);
}

bool internal_code(const std::string& code) { return code == "InvariantBreach" || code == "RelationFailed"; }

int fail(int code, const std::string& error, const std::string& message) {
  Json j;
  j["error"] = error;
  j["message"] = message;
  std::cout << j.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"String polytopes, rigorous paths and small toric resolutions"};
  app.require_subcommand(1);
  Options o;
  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"paths", "rigorous paths of a word"},
      {"polytope", "H-representation of the string polytope"},
      {"index", "delta-index of a word"},
      {"small", "small-indices test"},
      {"bott", "Bott data (v_j, w_j) of a small-index word"},
      {"resolve", "small toric resolution verdict"},
      {"potential", "disk potential"},
      {"classes", "commutation classes of R(n+1)"},
      {"table", "classification table of R(n+1)"},
  };
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--word", o.word, "reduced word, e.g. 1,3,2,1,3,2");
    sub->add_option("--lambda", o.lambda, "weight in fundamental-weight coordinates (default 2,...,2)");
    sub->add_option("--delta", o.delta, "sequence of A/D, e.g. DDAD");
    sub->add_option("--coords", o.coords, "t or m")->check(CLI::IsMember({"t", "m"}));
    sub->add_option("--n", o.n, "rank");
    sub->add_flag("--mod-involution", o.mod_involution, "identify classes related by the letter involution");
    sub->add_flag("--vertices", o.vertices, "also enumerate vertices");
    sub->add_flag("--text", o.text, "plain text instead of JSON");
    sub->add_option("--out", o.out, "write output to a file");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(1, "UsageError", e.what());
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const std::string output = run(cmd, o);
    if (o.out.empty()) {
      std::cout << output;
    } else {
      std::ofstream f(o.out);
      if (!f) return fail(1, "IOError", "cannot open " + o.out);
      f << output;
    }
  } catch (const Error& e) {
    return fail(internal_code(e.code()) ? 2 : 1, e.code(), e.what());
  } catch (const std::exception& e) {
    return fail(2, "InternalError", e.what());
  }
  return 0;
}
