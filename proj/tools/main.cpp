// Command-line front end: every subcommand prints one JSON document (or a
// plain-text table with --format table) describing a root system, a Weyl
// group element, a Bruhat interval, tangent/curve weights, a Peterson
// translate, a smoothness verdict, a full singular locus, or a sweep over
// many Schubert varieties at once.
//
// Exit status: 0 on success, 2 on usage errors, 3 on domain errors (the
// error's stable name goes to stderr).

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "schubloc/render.hpp"

namespace {

using schubloc::BruhatInterval;
using schubloc::Root;
using schubloc::RootSystem;
using schubloc::RootSet;
using schubloc::SinglocOptions;
using schubloc::WeylElement;
using schubloc::json;

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  if (text == "e") return out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream part(token);
    int v;
    while (part >> v) out.push_back(v);
  }
  return out;
}

struct Session {
  std::string type;
  std::string format = "json";
  std::string output;
  bool allow_g2 = false;

  RootSystem system() const { return RootSystem::parse(type, allow_g2); }
  SinglocOptions options() const { return {.allow_g2_experimental = allow_g2}; }

  WeylElement element(const RootSystem& rs, const std::string& word) const {
    return WeylElement::from_word(rs, parse_ints(word));
  }

  Root direction(const RootSystem& rs, const std::string& coords) const {
    std::vector<int> c = parse_ints(coords);
    if (static_cast<int>(c.size()) != rs.rank())
      throw schubloc::IndexOutOfRange("direction needs one coordinate per simple root");
    auto r = rs.find_root(c);
    if (!r) throw schubloc::IndexOutOfRange("direction is not a root");
    return *r;
  }

  void emit(const json& doc, const std::string& table) const {
    std::string text = format == "table" ? table : doc.dump(2) + "\n";
    if (output.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot open output file: " + output);
    out << text;
  }
};

std::string verdict_line(const std::string& kind, const WeylElement& w,
                         const WeylElement& x, schubloc::Verdict v) {
  std::ostringstream out;
  out << kind << " of X(" << schubloc::word_text(w) << ") at "
      << schubloc::word_text(x) << ": " << schubloc::verdict_name(v) << "\n";
  return out.str();
}

std::string roots_table(const RootSystem& rs) {
  std::ostringstream out;
  out << rs.descriptor() << ": rank " << rs.rank() << ", " << rs.root_count()
      << " roots, |W| = " << rs.weyl_order()
      << (rs.simply_laced() ? ", simply laced" : "") << "\n";
  out << "idx  coords           height  length\n";
  for (int p = 0; p < rs.positive_count(); ++p) {
    Root r(p);
    std::string coords = schubloc::root_text(rs, r);
    out << p << (p < 10 ? "    " : "   ") << coords
        << std::string(coords.size() < 17 ? 17 - coords.size() : 1, ' ')
        << rs.height(r) << "       " << (rs.is_long(r) ? "long" : "short")
        << "\n";
  }
  return out.str();
}

std::string element_table(const WeylElement& w) {
  const RootSystem& rs = w.system();
  std::ostringstream out;
  out << "word:    " << schubloc::word_text(w) << "\n"
      << "length:  " << w.length() << "\n"
      << "inverse: " << schubloc::word_text(w.inverse()) << "\n";
  out << "descents:";
  for (int i = 1; i <= rs.rank(); ++i)
    if (w.right_descent(i)) out << " " << i;
  out << "\n";
  for (int i = 1; i <= rs.rank(); ++i)
    out << "w(alpha_" << i
        << ") = " << schubloc::root_text(rs, w.apply(rs.simple_root(i)))
        << "\n";
  return out.str();
}

std::string interval_table(const BruhatInterval& X) {
  std::ostringstream out;
  out << "[e, " << schubloc::word_text(X.top()) << "]: " << X.size()
      << " elements, dimension " << X.top().length() << "\n";
  out << "poincare:";
  for (long c : X.rank_table()) out << " " << c;
  out << "\n";
  for (int k = 0; k < X.size(); ++k)
    out << k << ": " << schubloc::word_text(X.element(k)) << " (length "
        << X.element(k).length() << ")\n";
  return out.str();
}

std::string report_table(const schubloc::SmoothnessReport& rep) {
  const BruhatInterval& X = *rep.interval;
  std::ostringstream out;
  out << "X(" << schubloc::word_text(X.top()) << "): "
      << (rep.max_singular.empty() ? "smooth" : "singular")
      << (rep.g2_unverified ? " (G2: experimental, unverified)" : "") << "\n";
  for (int k = 0; k < X.size(); ++k)
    out << schubloc::word_text(X.element(k)) << " (length "
        << X.element(k).length()
        << "): " << schubloc::verdict_name(rep.verdicts[k]) << "\n";
  out << "maximal singular points:";
  if (rep.max_singular.empty()) out << " none";
  for (int k : rep.max_singular)
    out << " " << schubloc::word_text(X.element(k));
  out << "\n";
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{
      "Tangent spaces, Peterson translates, and singular loci of Schubert "
      "varieties"};
  app.require_subcommand(1);
  app.fallthrough();

  Session s;
  app.add_option("--type", s.type,
                 "Root system descriptor, e.g. B2, A3, B2xA1, F4")
      ->required();
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--output", s.output, "Write the result to a file");
  app.add_flag("--allow-g2", s.allow_g2,
               "Enable experimental, unverified G2 support");

  // roots -----------------------------------------------------------------
  app.add_subcommand("roots", "List the positive roots and the form")
      ->callback([&] {
        RootSystem rs = s.system();
        s.emit(schubloc::roots_json(rs), roots_table(rs));
      });

  // element ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("element", "Inspect one Weyl group element");
    auto word = std::make_shared<std::string>();
    cmd->add_option("--word", *word, "Reduced word, e.g. \"1 2 1\"")->required();
    cmd->callback([&, word] {
      RootSystem rs = s.system();
      WeylElement w = s.element(rs, *word);
      s.emit(schubloc::element_json(w), element_table(w));
    });
  }

  // interval ---------------------------------------------------------------
  {
    auto* cmd =
        app.add_subcommand("interval", "Enumerate the Bruhat interval [e, w]");
    auto word = std::make_shared<std::string>();
    cmd->add_option("--word", *word, "Word of the top element")->required();
    cmd->callback([&, word] {
      RootSystem rs = s.system();
      BruhatInterval X(s.element(rs, *word));
      s.emit(schubloc::interval_json(X), interval_table(X));
    });
  }

  // tangent-weights ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "tangent-weights", "Curve (= tangent, at smooth points) weights of "
                           "X(w) at a fixed point");
    auto word = std::make_shared<std::string>();
    auto at = std::make_shared<std::string>();
    cmd->add_option("--word", *word, "Word of w")->required();
    cmd->add_option("--at", *at, "Word of the fixed point (\"e\" = identity)")
        ->required();
    cmd->callback([&, word, at] {
      RootSystem rs = s.system();
      BruhatInterval X(s.element(rs, *word));
      WeylElement x = s.element(rs, *at);
      RootSet weights = schubloc::curve_weights(X, x);
      std::ostringstream table;
      table << "curve weights of X(" << schubloc::word_text(X.top()) << ") at "
            << schubloc::word_text(x) << ": " << schubloc::set_text(rs, weights)
            << "\n";
      s.emit(schubloc::tangent_json(X, x), table.str());
    });
  }

  // translate ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "translate", "Peterson translate along a T-curve, computed at the "
                     "curve's lower fixed point");
    auto word = std::make_shared<std::string>();
    auto upper = std::make_shared<std::string>();
    auto dir = std::make_shared<std::string>();
    cmd->add_option("--word", *word, "Word of w")->required();
    cmd->add_option("--upper", *upper, "Word of the curve's upper fixed point")
        ->required();
    cmd->add_option("--direction", *dir,
                    "Coordinates of the curve direction, e.g. \"1,1\"")
        ->required();
    cmd->callback([&, word, upper, dir] {
      RootSystem rs = s.system();
      BruhatInterval X(s.element(rs, *word));
      WeylElement y = s.element(rs, *upper);
      Root alpha = s.direction(rs, *dir);
      json doc = schubloc::translate_json(X, y, alpha);
      std::ostringstream table;
      table << "translate along the curve " << schubloc::word_text(y) << " -> "
            << doc["lower"].dump() << " with direction "
            << schubloc::root_text(rs, alpha) << ":\n  "
            << doc["translate"].dump() << "\n  matches curve weights: "
            << (doc["equals_curve_weights"].get<bool>() ? "yes" : "no") << "\n";
      s.emit(doc, table.str());
    });
  }

  // smooth-at ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("smooth-at",
                                   "Verdict for X(w) at one fixed point");
    auto word = std::make_shared<std::string>();
    auto at = std::make_shared<std::string>();
    cmd->add_option("--word", *word, "Word of w")->required();
    cmd->add_option("--at", *at, "Word of the fixed point")->required();
    cmd->callback([&, word, at] {
      RootSystem rs = s.system();
      WeylElement w = s.element(rs, *word);
      WeylElement x = s.element(rs, *at);
      schubloc::Verdict v = schubloc::smooth_at(w, x, s.options());
      json doc;
      doc["type"] = "verdict";
      doc["word"] = schubloc::word_json(w);
      doc["at"] = schubloc::word_json(x);
      doc["verdict"] = std::string(schubloc::verdict_name(v));
      if (rs.has_g2()) doc["g2_experimental"] = true;
      s.emit(doc, verdict_line("smoothness", w, x, v));
    });
  }

  // singular-locus ------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "singular-locus", "Pointwise verdicts and maximal singular points");
    auto word = std::make_shared<std::string>();
    cmd->add_option("--word", *word, "Word of w")->required();
    cmd->callback([&, word] {
      RootSystem rs = s.system();
      schubloc::SmoothnessReport rep =
          schubloc::smoothness_report(s.element(rs, *word), s.options());
      s.emit(schubloc::report_json(rep), report_table(rep));
    });
  }

  // rationally-smooth ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "rationally-smooth", "Rational smoothness of the whole variety");
    auto word = std::make_shared<std::string>();
    cmd->add_option("--word", *word, "Word of w")->required();
    cmd->callback([&, word] {
      RootSystem rs = s.system();
      BruhatInterval X(s.element(rs, *word));
      schubloc::RationalSmoothnessEvidence ev =
          schubloc::rationally_smooth_variety(X);
      std::ostringstream table;
      table << "X(" << schubloc::word_text(X.top()) << ") is "
            << (ev.verdict ? "" : "not ") << "rationally smooth\n";
      s.emit(schubloc::evidence_json(X, ev), table.str());
    });
  }

  // gp-smooth-at ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "gp-smooth-at", "Verdict for a Schubert variety in G/P at a fixed "
                        "point (both given by minimal coset representatives)");
    auto word = std::make_shared<std::string>();
    auto at = std::make_shared<std::string>();
    auto jopt = std::make_shared<std::string>();
    cmd->add_option("--word", *word, "Word of w (minimal representative)")
        ->required();
    cmd->add_option("--at", *at, "Word of the fixed point (minimal rep.)")
        ->required();
    cmd->add_option("--J", *jopt, "Parabolic simple indices, e.g. \"1,3\"")
        ->required();
    cmd->callback([&, word, at, jopt] {
      RootSystem rs = s.system();
      WeylElement w = s.element(rs, *word);
      WeylElement x = s.element(rs, *at);
      std::vector<int> J = parse_ints(*jopt);
      schubloc::Verdict v = schubloc::gp_smooth_at(J, w, x, s.options());
      json doc;
      doc["type"] = "verdict";
      doc["word"] = schubloc::word_json(w);
      doc["at"] = schubloc::word_json(x);
      doc["J"] = J;
      doc["verdict"] = std::string(schubloc::verdict_name(v));
      if (rs.has_g2()) doc["g2_experimental"] = true;
      s.emit(doc, verdict_line("quotient smoothness", w, x, v));
    });
  }

  // sweep ---------------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "sweep", "Smoothness reports for every w up to a length cap");
    auto max_length = std::make_shared<int>(-1);
    auto length = std::make_shared<int>(-1);
    auto parallel = std::make_shared<int>(0);
    auto budget = std::make_shared<unsigned long>(100000);
    auto singular_only = std::make_shared<bool>(false);
    cmd->add_option("--max-length", *max_length, "Only tops with l(w) <= N");
    cmd->add_option("--length", *length, "Only tops with l(w) == N");
    cmd->add_option("--parallel", *parallel,
                    "Worker threads (0 = SCHUBLOC_PARALLEL or all cores)");
    cmd->add_option("--budget", *budget, "Abort if |W| exceeds this");
    cmd->add_flag("--singular-only", *singular_only,
                  "Report only the singular varieties");
    cmd->callback([&, max_length, length, parallel, budget, singular_only] {
      RootSystem rs = s.system();
      if (rs.weyl_order() > *budget)
        throw schubloc::BudgetExceeded(
            "Weyl group order " + std::to_string(rs.weyl_order()) +
            " exceeds budget " + std::to_string(*budget));

      // Enumerate the group breadth-first, then filter and sort.
      std::vector<WeylElement> tops;
      {
        std::unordered_map<WeylElement, int, WeylElement::Hash> seen;
        std::vector<WeylElement> queue{WeylElement::identity(rs)};
        seen.emplace(queue[0], 0);
        for (size_t head = 0; head < queue.size(); ++head) {
          WeylElement cur = queue[head];
          for (int i = 1; i <= rs.rank(); ++i) {
            WeylElement next = cur * WeylElement::simple_reflection(rs, i);
            if (seen.emplace(next, static_cast<int>(queue.size())).second)
              queue.push_back(std::move(next));
          }
        }
        for (WeylElement& w : queue) {
          if (*max_length >= 0 && w.length() > *max_length) continue;
          if (*length >= 0 && w.length() != *length) continue;
          tops.push_back(std::move(w));
        }
      }
      std::sort(tops.begin(), tops.end(),
                [](const WeylElement& a, const WeylElement& b) {
                  if (a.length() != b.length()) return a.length() < b.length();
                  return a.word() < b.word();
                });

      int workers = *parallel;
      if (workers <= 0) {
        if (const char* env = std::getenv("SCHUBLOC_PARALLEL"))
          workers = std::atoi(env);
        if (workers <= 0)
          workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers <= 0) workers = 1;
      }
      if (!tops.empty())
        workers = std::min(workers, static_cast<int>(tops.size()));

      std::vector<schubloc::SmoothnessReport> reports(tops.size());
      std::atomic<size_t> cursor{0};
      std::exception_ptr first_error;
      std::mutex error_mutex;
      auto work = [&] {
        while (true) {
          size_t k = cursor.fetch_add(1);
          if (k >= tops.size()) return;
          try {
            reports[k] = schubloc::smoothness_report(tops[k], s.options());
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      };
      if (workers == 1) {
        work();
      } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
      }
      if (first_error) std::rethrow_exception(first_error);

      json entries = json::array();
      std::ostringstream table;
      long singular = 0;
      for (size_t k = 0; k < tops.size(); ++k) {
        const schubloc::SmoothnessReport& rep = reports[k];
        bool smooth = rep.max_singular.empty();
        if (!smooth) ++singular;
        if (*singular_only && smooth) continue;
        json entry;
        entry["word"] = schubloc::word_json(tops[k]);
        entry["length"] = tops[k].length();
        entry["smooth"] = smooth;
        json maxsing = json::array();
        for (int i : rep.max_singular)
          maxsing.push_back(schubloc::word_json(rep.interval->element(i)));
        entry["max_singular"] = maxsing;
        entries.push_back(std::move(entry));
        table << schubloc::word_text(tops[k]) << " (length "
              << tops[k].length() << "): " << (smooth ? "smooth" : "singular")
              << "\n";
      }
      json doc;
      doc["type"] = "sweep";
      doc["descriptor"] = rs.descriptor();
      if (rs.has_g2()) doc["g2_experimental"] = true;
      doc["tops"] = static_cast<long>(tops.size());
      doc["singular"] = singular;
      doc["entries"] = entries;
      std::ostringstream head;
      head << rs.descriptor() << ": " << tops.size() << " varieties, "
           << singular << " singular\n";
      s.emit(doc, head.str() + table.str());
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const schubloc::DomainError& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
