#include "qq/report.hpp"

#include <json.hpp>
#include <sstream>

#include "qq/error.hpp"
#include "qq/io.hpp"
#include "qq/lpa.hpp"
#include "qq/relcheck.hpp"

namespace qq::report {
namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json shape_json(const AlgebraShape& s) {
  Json out = Json::array();
  for (const auto& b : s.blocks()) out.push_back({{"id", b.id}, {"size", b.size}});
  return out;
}

std::string shape_text(const AlgebraShape& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& b : s.blocks()) {
    if (!out.empty()) out += " x ";
    out += b.id + ":M" + std::to_string(b.size);
  }
  return out;
}

std::string class_text(const AlgebraShape& vs, const std::vector<std::size_t>& cls) {
  std::string out = "{";
  for (std::size_t k = 0; k < cls.size(); ++k) {
    if (k) out += ", ";
    out += vs.id(cls[k]);
  }
  return out + "}";
}

Json word_json(const LpaPresentation& p, const Word& w) {
  Json out = Json::array();
  if (w.empty()) out.push_back("1");
  for (const auto& s : w) out.push_back(symbol_key(p, s));
  return out;
}

Json poly_json(const LpaPresentation& p, const Poly& poly) {
  Json terms = Json::array();
  for (const auto& [w, c] : poly.terms()) {
    terms.push_back({{"coeff", c}, {"word", word_json(p, w)}});
  }
  return terms;
}

Json element_json(const MonoidPresentation& p, const MonoidElement& x) {
  Json out = Json::object();
  for (std::size_t g = 0; g < x.size(); ++g) {
    if (x[g] != 0) out[p.generators[g]] = x[g];
  }
  return out;
}

std::string kind_name(SymbolKind k) {
  switch (k) {
    case SymbolKind::Rho: return "rho";
    case SymbolKind::Sigma: return "sig";
    case SymbolKind::SigmaBar: return "sigbar";
  }
  return {};
}

}  // namespace

std::string info(const QuantumQuiver& q, bool json) {
  const auto& vs = q.vertex_shape();
  const auto& es = q.edge_shape();
  const auto classes = source_classes(q);
  if (json) {
    Json j;
    j["vertices"] = shape_json(vs);
    j["edges"] = shape_json(es);
    Json s = Json::object(), r = Json::object();
    for (std::size_t v = 0; v < vs.block_count(); ++v) {
      for (std::size_t a = 0; a < es.block_count(); ++a) {
        if (auto o = q.source().table().at(v, a)) s[vs.id(v)][es.id(a)] = o;
        if (auto o = q.range().table().at(v, a)) r[vs.id(v)][es.id(a)] = o;
      }
    }
    j["source"] = s;
    j["range"] = r;
    j["vertex_dimension"] = vs.dimension();
    j["edge_dimension"] = es.dimension();
    j["commutative"] = q.is_commutative();
    j["disconnected"] = q.is_disconnected();
    Json cl = Json::array();
    for (const auto& c : classes) {
      Json ids = Json::array();
      for (auto v : c) ids.push_back(vs.id(v));
      cl.push_back(ids);
    }
    j["source_classes"] = cl;
    return dump(j);
  }
  std::ostringstream out;
  out << "vertices: " << shape_text(vs) << " (dimension " << vs.dimension() << ")\n";
  out << "edges: " << shape_text(es) << " (dimension " << es.dimension() << ")\n";
  auto table = [&](const char* name, const OrderTable& t) {
    out << name << ":";
    bool any = false;
    for (std::size_t v = 0; v < vs.block_count(); ++v) {
      for (std::size_t a = 0; a < es.block_count(); ++a) {
        if (auto o = t.at(v, a)) {
          out << " " << vs.id(v) << "->" << es.id(a) << "=" << o;
          any = true;
        }
      }
    }
    out << (any ? "\n" : " none\n");
  };
  table("source orders", q.source().table());
  table("range orders", q.range().table());
  out << "commutative: " << (q.is_commutative() ? "yes" : "no") << "\n";
  out << "disconnected: " << (q.is_disconnected() ? "yes" : "no") << "\n";
  out << "source classes:";
  for (const auto& c : classes) out << " " << class_text(vs, c);
  out << "\n";
  return out.str();
}

Outcome completeness(const QuantumQuiver& q, bool json) {
  const auto res = is_complete(q);
  const auto& vs = q.vertex_shape();
  Outcome o;
  o.verdict = res.complete ? Verdict::Affirmative : Verdict::Negative;
  std::string image;
  for (const auto& u : res.failing_image) {
    if (!image.empty()) image += " + ";
    image += "e^" + vs.id(u.block) + "_{" + std::to_string(u.row) + "," +
             std::to_string(u.col) + "}";
  }
  if (image.empty()) image = "0";
  const std::string note =
      "evaluated on the given embeddings; other embeddings with the same orders may differ";
  if (json) {
    Json j;
    j["complete"] = res.complete;
    if (res.failing_vertex) {
      j["failing_vertex"] = vs.id(*res.failing_vertex);
      j["image"] = image;
    }
    j["note"] = note;
    o.text = dump(j);
  } else if (res.complete) {
    o.text = "complete\nnote: " + note + "\n";
  } else {
    const auto& v = vs.id(*res.failing_vertex);
    o.text = "not complete: r*s(1_" + v + ") = " + image + "\nnote: " + note + "\n";
  }
  return o;
}

Outcome divisibility(const QuantumQuiver& q, bool json) {
  const auto res = divisibility_check(q);
  const auto& vs = q.vertex_shape();
  Outcome o;
  o.verdict = res.ok ? Verdict::Affirmative : Verdict::Negative;
  if (json) {
    Json j;
    j["ok"] = res.ok;
    j["total"] = res.total;
    if (res.failing_vertex) {
      j["failing_vertex"] = vs.id(*res.failing_vertex);
      j["size"] = vs.size(*res.failing_vertex);
    }
    o.text = dump(j);
  } else if (res.ok) {
    o.text = "divisibility holds: every block size divides " + std::to_string(res.total) + "\n";
  } else {
    const auto v = *res.failing_vertex;
    o.text = "divisibility fails at " + vs.id(v) + ": " + std::to_string(vs.size(v)) +
             " does not divide " + std::to_string(res.total) + "\n";
  }
  return o;
}

Outcome weak_iso(const QuantumQuiver& a, const QuantumQuiver& b, bool json) {
  const auto w = qq::weak_iso(a, b);
  Outcome o;
  o.verdict = w ? Verdict::Affirmative : Verdict::Negative;
  if (json) {
    Json j;
    j["weakly_isomorphic"] = static_cast<bool>(w);
    if (w) {
      Json vm = Json::object(), em = Json::object();
      for (std::size_t v = 0; v < w->vertex_map.size(); ++v) {
        vm[a.vertex_shape().id(v)] = b.vertex_shape().id(w->vertex_map[v]);
      }
      for (std::size_t e = 0; e < w->edge_map.size(); ++e) {
        em[a.edge_shape().id(e)] = b.edge_shape().id(w->edge_map[e]);
      }
      j["vertex_map"] = vm;
      j["edge_map"] = em;
      j["full_isomorphism"] = w->full_isomorphism;
    }
    o.text = dump(j);
    return o;
  }
  if (!w) {
    o.text = "not weakly isomorphic\n";
    return o;
  }
  std::ostringstream out;
  out << "weakly isomorphic\nvertex map:";
  for (std::size_t v = 0; v < w->vertex_map.size(); ++v) {
    out << " " << a.vertex_shape().id(v) << "->" << b.vertex_shape().id(w->vertex_map[v]);
  }
  out << "\nedge map:";
  for (std::size_t e = 0; e < w->edge_map.size(); ++e) {
    out << " " << a.edge_shape().id(e) << "->" << b.edge_shape().id(w->edge_map[e]);
  }
  out << "\nfull isomorphism: " << (w->full_isomorphism ? "yes" : "no") << "\n";
  o.text = out.str();
  return o;
}

std::string lpa(const QuantumQuiver& q, std::string_view format) {
  if (format != "json" && format != "text") {
    throw InvalidArgument("unsupported lpa format '" + std::string(format) +
                          "' (expected json or text)");
  }
  const auto p = generate_presentation(q);
  if (format == "text") return render_text(p);
  Json j;
  Json gens = Json::array();
  for (const auto& g : p.generators) {
    gens.push_back({{"kind", kind_name(g.kind)},
                    {"block", g.kind == SymbolKind::Rho ? p.vertices.id(g.block)
                                                        : p.edges.id(g.block)},
                    {"row", g.row},
                    {"col", g.col}});
  }
  j["generators"] = gens;
  Json rels = Json::array();
  for (const auto& r : p.relations) {
    rels.push_back({{"tag", tag_name(r.tag)}, {"terms", poly_json(p, r.poly)}});
  }
  j["relations"] = rels;
  return dump(j);
}

Outcome lpa_compare(const QuantumQuiver& q, bool json) {
  const auto cmp = compare_classical(q);
  const auto& cp = cmp.classical;
  Outcome o;
  const bool clean = cmp.missing_other.empty() && cmp.extra.empty() && cmp.unit_relation;
  o.verdict = clean ? Verdict::Affirmative : Verdict::Negative;
  if (json) {
    Json j;
    Json matched = Json::object();
    for (const auto& [tag, n] : cmp.matched) matched[std::string(tag_name(tag))] = n;
    j["matched"] = matched;
    j["unit_relation"] = cmp.unit_relation;
    Json cross = Json::array();
    for (const auto& p : cmp.missing_cross_edge) cross.push_back(poly_text(cp, p) + " = 0");
    j["missing_cross_edge"] = cross;
    Json other = Json::array();
    for (const auto& r : cmp.missing_other) {
      other.push_back({{"tag", tag_name(r.tag)}, {"relation", poly_text(cp, r.poly) + " = 0"}});
    }
    j["missing_other"] = other;
    Json extra = Json::array();
    for (const auto& r : cmp.extra) {
      extra.push_back({{"tag", tag_name(r.tag)}, {"relation", poly_text(cp, r.poly) + " = 0"}});
    }
    j["extra"] = extra;
    o.text = dump(j);
    return o;
  }
  std::ostringstream out;
  out << "matched:";
  for (const auto& [tag, n] : cmp.matched) out << " " << tag_name(tag) << "=" << n;
  out << "\nunit relation (sum of p_v = 1): " << (cmp.unit_relation ? "matched" : "missing")
      << "\n";
  out << "not verbatim, cross-edge (" << cmp.missing_cross_edge.size() << "):\n";
  for (const auto& p : cmp.missing_cross_edge) out << "  " << poly_text(cp, p) << " = 0\n";
  out << "not verbatim, other (" << cmp.missing_other.size() << "):\n";
  for (const auto& r : cmp.missing_other) {
    out << "  " << tag_name(r.tag) << ": " << poly_text(cp, r.poly) << " = 0\n";
  }
  out << "extra quantum relations (" << cmp.extra.size() << "):\n";
  for (const auto& r : cmp.extra) {
    out << "  " << tag_name(r.tag) << ": " << poly_text(cp, r.poly) << " = 0\n";
  }
  o.text = out.str();
  return o;
}

std::string monoid(const QuantumQuiver& q, bool json) {
  const auto p = monoid_presentation(q);
  if (json) {
    Json j;
    j["generators"] = p.generators;
    Json rels = Json::array();
    for (const auto& r : p.relations) {
      rels.push_back({{"tag", tag_text(r)},
                      {"lhs", element_json(p, r.lhs)},
                      {"rhs", element_json(p, r.rhs)}});
    }
    j["relations"] = rels;
    return dump(j);
  }
  std::ostringstream out;
  out << "generators: I";
  for (const auto& v : p.vertex_ids) out << " P(" << v << ")";
  out << "\n";
  for (const auto& r : p.relations) {
    out << tag_text(r) << ": " << relation_text(p, r) << "\n";
  }
  return out.str();
}

Outcome monoid_eq(const QuantumQuiver& q, std::string_view lhs, std::string_view rhs,
                  const MonoidEqOptions& options, bool json) {
  const auto p = monoid_presentation(q);
  const auto a = parse_element(p, lhs);
  const auto b = parse_element(p, rhs);
  const auto res = qq::monoid_eq(p, a, b, options);
  Outcome o;
  switch (res.verdict) {
    case MonoidVerdict::Equal: o.verdict = Verdict::Affirmative; break;
    case MonoidVerdict::NotEqual: o.verdict = Verdict::Negative; break;
    case MonoidVerdict::Inconclusive: o.verdict = Verdict::Inconclusive; break;
  }
  if (json) {
    Json j;
    j["verdict"] = verdict_name(res.verdict);
    j["lhs"] = element_json(p, a);
    j["rhs"] = element_json(p, b);
    if (res.verdict == MonoidVerdict::Equal) {
      j["depth"] = res.depth;
      Json path = Json::array();
      for (const auto& x : res.path) path.push_back(element_text(p, x));
      j["path"] = path;
    }
    if (res.certificate) {
      const auto& c = *res.certificate;
      Json cert;
      switch (c.kind) {
        case SeparatingMap::Kind::Cyclic: cert["target"] = "Z/" + std::to_string(c.modulus); break;
        case SeparatingMap::Kind::Integer: cert["target"] = "Z"; break;
        case SeparatingMap::Kind::Truncation:
          cert["target"] = "{0.." + std::to_string(c.modulus) + "}";
          break;
      }
      Json w = Json::object();
      for (std::size_t g = 0; g < c.weights.size(); ++g) w[p.generators[g]] = c.weights[g];
      cert["weights"] = w;
      cert["image_lhs"] = c.image_a;
      cert["image_rhs"] = c.image_b;
      j["certificate"] = cert;
    }
    o.text = dump(j);
    return o;
  }
  std::ostringstream out;
  out << verdict_name(res.verdict) << "\n";
  if (res.verdict == MonoidVerdict::Equal && res.path.size() > 1) {
    out << "depth: " << res.depth << " (per side)\npath:\n";
    for (const auto& x : res.path) out << "  " << element_text(p, x) << "\n";
  }
  if (res.certificate) out << "certificate: " << certificate_text(p, *res.certificate) << "\n";
  o.text = out.str();
  return o;
}

Outcome verify_witnesses(const QuantumQuiver& q, std::optional<std::string> class_id, bool json) {
  const auto& vs = q.vertex_shape();
  const auto classes = source_classes(q);
  std::vector<std::size_t> selected;
  if (class_id) {
    selected.push_back(class_of(q, *class_id));
  } else {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      bool sink = true;
      for (auto v : classes[c]) {
        for (std::size_t a = 0; a < q.edge_shape().block_count(); ++a) {
          if (q.source().table().at(v, a) > 0) sink = false;
        }
      }
      if (!sink) selected.push_back(c);
    }
  }

  Outcome o;
  Json all = Json::array();
  std::ostringstream out;
  if (selected.empty()) out << "no non-sink source classes\n";
  for (auto c : selected) {
    const auto rep = verify_identities(q, c);
    const auto& w = rep.witnesses;
    Json jc;
    jc["class"] = class_text(vs, classes[c]);
    jc["q"] = w.q;
    jc["A"] = {w.a.rows(), w.a.cols()};
    jc["B"] = {w.b.rows(), w.b.cols()};
    out << "class " << class_text(vs, classes[c]) << ": q = " << w.q << ", A " << w.a.rows()
        << "x" << w.a.cols() << ", B " << w.b.rows() << "x" << w.b.cols() << "\n";
    for (const auto& id : rep.identities) {
      if (id.inconclusive > 0) o.verdict = Verdict::Inconclusive;
      Json ji;
      ji["confirmed"] = id.confirmed;
      ji["inconclusive"] = id.inconclusive;
      Json entries = Json::array();
      out << "  " << id.name << " (" << id.rows << "x" << id.cols << "): " << id.confirmed
          << " confirmed, " << id.inconclusive << " inconclusive\n";
      for (const auto& e : id.entries) {
        Json je;
        je["row"] = e.row + 1;
        je["col"] = e.col + 1;
        je["verdict"] = e.confirmed ? "Confirmed" : "Inconclusive";
        je["relations"] = e.tags;
        je["residual_terms"] = poly_json(rep.presentation, e.residual);
        entries.push_back(je);
        if (!e.confirmed) {
          out << "    (" << e.row + 1 << "," << e.col + 1
              << ") residual: " << poly_text(rep.presentation, e.residual) << "\n";
        }
      }
      ji["entries"] = entries;
      jc[id.name] = ji;
    }
    all.push_back(jc);
  }
  o.text = json ? dump(all) : out.str();
  return o;
}

}  // namespace qq::report
