#pragma once

namespace pds {
class PeriodicSequence;
class DirichletCharacter;
} // namespace pds
