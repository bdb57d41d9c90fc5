#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "multiwheel/bundle.hpp"
#include "multiwheel/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"multiwheel: build 4-critical multiwheel graphs from odd "
               "wheels and certify their properties"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mw::kToolVersion));

  mw::ConstructOptions construct;
  CLI::App* c = app.add_subcommand(
      "construct", "build a family member from a spec string "
                   "(w:1rr-1rr-1rr, g:q=2, p:c=1;s=1,1,2)");
  c->add_option("spec", construct.spec, "family spec string")->required();
  c->add_option("--format", construct.format, "json | graph6 | dot");
  c->add_flag("--with-embedding", construct.with_embedding,
              "include a face list when one is available");
  c->add_option("--out", construct.out_path, "write to file instead of stdout");

  mw::VerifyOptions verify;
  CLI::App* v = app.add_subcommand(
      "verify", "certify claims about a graph; exit 0 iff all requested hold");
  v->add_option("input", verify.input, "spec string or graph file (graph6/json)")
      ->required();
  v->add_option("--checks", verify.checks,
                "subset of color,critical,planar,quad,bracket")
      ->delimiter(',');
  v->add_option("--embedding", verify.embedding_path,
                "embedding json for the quad check");
  v->add_flag("--contraction-sweep", verify.contraction_sweep,
              "also report chi after contracting every edge");
  v->add_option("--out", verify.out_path, "write the bundle to a file");

  mw::SweepOptions sweep;
  CLI::App* s = app.add_subcommand(
      "sweep", "run the certificates over a family range");
  s->add_option("family", sweep.family, "plane | grotzsch | projective")
      ->required();
  s->add_option("--sections", sweep.sections, "plane: section count (odd)");
  s->add_option("--max-order", sweep.max_order, "largest per-section order");
  s->add_option("--central-order", sweep.central_order,
                "projective: central wheel order");
  s->add_option("--cap", sweep.cap, "skip instances with more vertices");
  s->add_flag("--allow-large", sweep.allow_large,
              "acknowledge slow exact search above the default cap");
  s->add_option("--jobs", sweep.jobs, "parallel workers");
  s->add_option("--format", sweep.format, "table | csv | json");
  s->add_option("--out", sweep.out_path, "write to file instead of stdout");

  mw::EmbedCheckOptions embed;
  CLI::App* e = app.add_subcommand("embed", "validate an embedding file");
  bool embed_check = false;
  e->add_flag("--check", embed_check, "validate the face list")->required();
  e->add_option("file", embed.path, "embedding json")->required();

  mw::MinorOptions minor;
  CLI::App* m = app.add_subcommand("minor", "exact minor containment");
  m->add_option("--pattern", minor.pattern, "O | O- | K4 | K5 | K33 | file")
      ->required();
  m->add_option("--host", minor.host_path, "graph file or family spec")
      ->required();
  m->add_option("--out", minor.out_path, "write the witness to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : mw::kExitInputError;
  }

  if (c->parsed()) return mw::cmd_construct(construct, std::cout, std::cerr);
  if (v->parsed()) return mw::cmd_verify(verify, std::cout, std::cerr);
  if (s->parsed()) return mw::cmd_sweep(sweep, std::cout, std::cerr);
  if (e->parsed()) return mw::cmd_embed_check(embed, std::cout, std::cerr);
  if (m->parsed()) return mw::cmd_minor(minor, std::cout, std::cerr);
  return mw::kExitInputError;
}
