#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "trisect/presentation.hpp"
#include "trisect/tietze.hpp"

namespace trisect {

/// Generator-image map between presentations. Immutable value; the validity
/// certificate and the free-basis rewrite of the codomain are computed on
/// first use and cached (copies share the cache).
class GroupHom {
 public:
  GroupHom(std::string name, Presentation domain, Presentation codomain,
           std::vector<Word> images);

  const std::string& name() const { return name_; }
  const Presentation& domain() const { return domain_; }
  const Presentation& codomain() const { return codomain_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int generator) const { return images_[static_cast<size_t>(generator)]; }

  /// Free-basis rewrite of the codomain; throws when the codomain is not a
  /// free presentation or of the standard single-relator shape.
  const FreeBasisRewrite& codomain_basis() const;

  /// Image of a domain word rewritten into the codomain free basis.
  Word apply_in_basis(const Word& w) const;

  /// All generator images rewritten into the codomain free basis.
  const std::vector<Word>& images_in_basis() const;

  /// Well-definedness: every domain relator maps to the identity in the
  /// codomain free basis. Refuted certificates carry the first nontrivial
  /// reduced relator image as witness.
  const Certificate& validity() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<FreeBasisRewrite> rewrite;
    std::optional<std::vector<Word>> basis_images;
    std::optional<Certificate> validity;
  };

  std::string name_;
  Presentation domain_;
  Presentation codomain_;
  std::vector<Word> images_;
  std::shared_ptr<Cache> cache_;
};

Certificate validate_hom(const GroupHom& h);

/// Def-style surjectivity test: the rewritten generator images generate the
/// codomain free group (their folded graph is the rose).
bool check_surjective(const GroupHom& h);

/// True iff the last `boundary` domain generators map, in the codomain free
/// basis, exactly to the last `boundary` codomain generators in order.
/// Vacuously true for boundary = 0.
bool check_boundary_condition(const GroupHom& h, int boundary);

/// Pushout presentation of two maps with the same domain: both codomains
/// with generators retagged "#1"/"#2", their relators, then one
/// identification relator f(s)#1 (g(s)#2)^-1 per domain generator.
Presentation pushout(const GroupHom& f, const GroupHom& g);

}  // namespace trisect
