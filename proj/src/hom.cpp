#include "trisect/hom.hpp"

#include <algorithm>

#include "trisect/fold.hpp"

namespace trisect {

GroupHom::GroupHom(std::string name, Presentation domain, Presentation codomain,
                   std::vector<Word> images)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)),
      cache_(std::make_shared<Cache>()) {
  if (static_cast<int>(images_.size()) != domain_.generators().size())
    throw Error("hom '" + name_ + "' needs one image per domain generator");
  for (const Word& w : images_)
    if (!w.alphabet().same(codomain_.generators()))
      throw Error("hom '" + name_ + "' has an image over the wrong alphabet");
}

const FreeBasisRewrite& GroupHom::codomain_basis() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->rewrite) cache_->rewrite = free_basis_rewrite(codomain_);
  return *cache_->rewrite;
}

Word GroupHom::apply_in_basis(const Word& w) const {
  const FreeBasisRewrite& rewrite = codomain_basis();
  const Word image = substitute(w, images_, codomain_.generators());
  return substitute(image, rewrite.images, rewrite.basis);
}

const std::vector<Word>& GroupHom::images_in_basis() const {
  const FreeBasisRewrite& rewrite = codomain_basis();
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis_images) {
    std::vector<Word> rewritten;
    rewritten.reserve(images_.size());
    for (const Word& image : images_)
      rewritten.push_back(substitute(image, rewrite.images, rewrite.basis));
    cache_->basis_images = std::move(rewritten);
  }
  return *cache_->basis_images;
}

const Certificate& GroupHom::validity() const {
  codomain_basis();  // may throw on unsupported codomain shape
  std::lock_guard lock(cache_->mutex);
  if (!cache_->validity) {
    Certificate certificate;
    certificate.verdict = Verdict::Certified;
    for (const Word& relator : domain_.relators()) {
      const Word image = substitute(relator, images_, codomain_.generators());
      const Word reduced =
          substitute(image, cache_->rewrite->images, cache_->rewrite->basis);
      if (!reduced.empty()) {
        certificate.verdict = Verdict::Refuted;
        certificate.witness_word = reduced;
        break;
      }
    }
    cache_->validity = std::move(certificate);
  }
  return *cache_->validity;
}

Certificate validate_hom(const GroupHom& h) { return h.validity(); }

bool check_surjective(const GroupHom& h) {
  return is_surjective_onto_free(h.images_in_basis(), h.codomain_basis().basis);
}

bool check_boundary_condition(const GroupHom& h, int boundary) {
  if (boundary == 0) return true;
  if (boundary < 0 || h.domain().generators().size() < boundary ||
      h.codomain().generators().size() < boundary)
    throw Error("presentations lack " + std::to_string(boundary) + " boundary generators");
  const FreeBasisRewrite& rewrite = h.codomain_basis();
  const int domain_first = h.domain().generators().size() - boundary;
  const int codomain_first = h.codomain().generators().size() - boundary;
  for (int j = 0; j < boundary; ++j) {
    const Word image = h.apply_in_basis(Word::letter(h.domain().generators(), domain_first + j));
    const Word expected = substitute(
        Word::letter(h.codomain().generators(), codomain_first + j), rewrite.images,
        rewrite.basis);
    if (!(image == expected)) return false;
  }
  return true;
}

namespace {

Word retag(const Word& w, int offset, const Alphabet& target) {
  std::vector<int32_t> raw;
  raw.reserve(w.codes().size());
  for (int32_t code : w.codes())
    raw.push_back(code > 0 ? code + offset : code - offset);
  return Word::reduce(target, raw);
}

}  // namespace

Presentation pushout(const GroupHom& f, const GroupHom& g) {
  if (!f.domain().generators().same(g.domain().generators()) ||
      !(f.domain() == g.domain()))
    throw Error("pushout needs maps with the same domain");

  std::vector<std::string> names;
  for (const auto& name : f.codomain().generators().names()) names.push_back(name + "#1");
  for (const auto& name : g.codomain().generators().names()) names.push_back(name + "#2");
  Alphabet alphabet(std::move(names));
  const int offset = f.codomain().generators().size();

  std::vector<Word> relators;
  for (const Word& r : f.codomain().relators()) relators.push_back(retag(r, 0, alphabet));
  for (const Word& r : g.codomain().relators()) relators.push_back(retag(r, offset, alphabet));
  for (int s = 0; s < f.domain().generators().size(); ++s)
    relators.push_back(concat(retag(f.image(s), 0, alphabet),
                              retag(g.image(s), offset, alphabet).inverse()));

  return Presentation("po(" + f.name() + "," + g.name() + ")", alphabet,
                      std::move(relators));
}

}  // namespace trisect
