//! The global symbol table.
//!
//! Symbols are interned once per process in a fixed order: a preamble of
//! reserved names (`pi`, `log_p` for primes below 100, `zeta_odd_k` for odd
//! k up to 21, `zetaprime_neg_2k` up to k = 10) followed by on-demand
//! registrations. Monomial comparison uses the interned id, so canonical
//! forms involving reserved symbols are stable across runs.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::PeriodError;

/// Behaviour of a symbol under complex conjugation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjugation {
    /// conj(x) = x
    Fixed,
    /// conj(x) = -x
    Negated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolId(pub(crate) u32);

struct Registry {
    names: Vec<(String, Conjugation)>,
    lookup: HashMap<String, u32>,
}

impl Registry {
    fn insert(&mut self, name: &str, conj: Conjugation) -> u32 {
        debug_assert!(!self.lookup.contains_key(name));
        let id = self.names.len() as u32;
        self.names.push((name.to_string(), conj));
        self.lookup.insert(name.to_string(), id);
        id
    }
}

fn registry() -> &'static RwLock<Registry> {
    static REG: OnceLock<RwLock<Registry>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut reg = Registry {
            names: Vec::new(),
            lookup: HashMap::new(),
        };
        reg.insert("pi", Conjugation::Fixed);
        for p in [
            2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
            79, 83, 89, 97,
        ] {
            reg.insert(&format!("log_{p}"), Conjugation::Fixed);
        }
        for k in (3..=21u64).step_by(2) {
            reg.insert(&format!("zeta_odd_{k}"), Conjugation::Fixed);
        }
        for k in 1..=10u64 {
            reg.insert(&format!("zetaprime_neg_{}", 2 * k), Conjugation::Fixed);
        }
        RwLock::new(reg)
    })
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Handle for the process-wide table of period symbols.
///
/// Names are unique and nonempty; reserved families (`log_p`, `pi`,
/// `zeta_odd_k`, `zetaprime_neg_2k`) register themselves on first use. All
/// symbols are treated as algebraically independent over Q.
pub struct SymbolTable;

impl SymbolTable {
    pub fn lookup(name: &str) -> Option<SymbolId> {
        registry().read().unwrap().lookup.get(name).copied().map(SymbolId)
    }

    pub fn name(id: SymbolId) -> String {
        registry().read().unwrap().names[id.0 as usize].0.clone()
    }

    pub fn conjugation(id: SymbolId) -> Conjugation {
        registry().read().unwrap().names[id.0 as usize].1
    }

    /// Declare a fresh symbol, or return the existing id when the declaration
    /// matches a previous one.
    pub fn declare(name: &str, conj: Conjugation) -> Result<SymbolId, PeriodError> {
        if name.is_empty()
            || name == "i"
            || !name.chars().next().unwrap().is_ascii_alphabetic() && !name.starts_with('_')
            || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            return Err(PeriodError::InvalidName(name.to_string()));
        }
        let mut reg = registry().write().unwrap();
        if let Some(&id) = reg.lookup.get(name) {
            if reg.names[id as usize].1 != conj {
                return Err(PeriodError::ConflictingDeclaration(name.to_string()));
            }
            return Ok(SymbolId(id));
        }
        Ok(SymbolId(reg.insert(name, conj)))
    }

    /// The symbol `pi`.
    pub fn pi() -> SymbolId {
        Self::lookup("pi").unwrap()
    }

    /// The symbol `log_p` for a prime p.
    pub fn log_prime(p: u64) -> Result<SymbolId, PeriodError> {
        if !is_prime(p) {
            return Err(PeriodError::InvalidName(format!("log_{p}")));
        }
        let name = format!("log_{p}");
        if let Some(id) = Self::lookup(&name) {
            return Ok(id);
        }
        Self::declare(&name, Conjugation::Fixed)
    }

    /// The opaque symbol for `zeta(k)` at odd k >= 3.
    pub fn zeta_odd(k: i64) -> Result<SymbolId, PeriodError> {
        if k < 3 || k % 2 == 0 {
            return Err(PeriodError::InvalidName(format!("zeta_odd_{k}")));
        }
        let name = format!("zeta_odd_{k}");
        if let Some(id) = Self::lookup(&name) {
            return Ok(id);
        }
        Self::declare(&name, Conjugation::Fixed)
    }

    /// The opaque symbol for `zeta'(-2k)` at k >= 1 (named by the argument 2k).
    pub fn zetaprime_neg(two_k: i64) -> Result<SymbolId, PeriodError> {
        if two_k < 2 || two_k % 2 != 0 {
            return Err(PeriodError::InvalidName(format!("zetaprime_neg_{two_k}")));
        }
        let name = format!("zetaprime_neg_{two_k}");
        if let Some(id) = Self::lookup(&name) {
            return Ok(id);
        }
        Self::declare(&name, Conjugation::Fixed)
    }

    /// Resolve a name occurring in textual input. Reserved families are
    /// registered on demand; any other name must have been declared.
    pub fn resolve(name: &str) -> Result<SymbolId, PeriodError> {
        if let Some(id) = Self::lookup(name) {
            return Ok(id);
        }
        if let Some(rest) = name.strip_prefix("log_") {
            if let Ok(p) = rest.parse::<u64>() {
                if is_prime(p) {
                    return Self::log_prime(p);
                }
            }
        }
        if let Some(rest) = name.strip_prefix("zeta_odd_") {
            if let Ok(k) = rest.parse::<i64>() {
                if k >= 3 && k % 2 == 1 {
                    return Self::zeta_odd(k);
                }
            }
        }
        if let Some(rest) = name.strip_prefix("zetaprime_neg_") {
            if let Ok(k) = rest.parse::<i64>() {
                if k >= 2 && k % 2 == 0 {
                    return Self::zetaprime_neg(k);
                }
            }
        }
        Err(PeriodError::UnknownSymbol(name.to_string()))
    }

    /// True for symbols whose rationality status the checks must not decide
    /// (odd zeta values and zeta derivatives at negative even integers).
    pub fn is_opaque(id: SymbolId) -> bool {
        let name = Self::name(id);
        name.starts_with("zeta_odd_") || name.starts_with("zetaprime_neg_")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reserved_families_resolve() {
        assert!(SymbolTable::lookup("pi").is_some());
        assert!(SymbolTable::lookup("log_2").is_some());
        assert_eq!(SymbolTable::resolve("log_2").unwrap(), SymbolTable::log_prime(2).unwrap());
        assert!(SymbolTable::resolve("log_4").is_err());
        assert!(SymbolTable::resolve("zeta_odd_3").is_ok());
        assert!(SymbolTable::resolve("zeta_odd_4").is_err());
        assert!(SymbolTable::resolve("zetaprime_neg_2").is_ok());
        assert!(SymbolTable::resolve("nonexistent_symbol_xyz").is_err());
    }

    #[test]
    fn declarations_conflict_on_conjugation() {
        let id = SymbolTable::declare("test_sym_a", Conjugation::Fixed).unwrap();
        assert_eq!(SymbolTable::declare("test_sym_a", Conjugation::Fixed).unwrap(), id);
        assert!(SymbolTable::declare("test_sym_a", Conjugation::Negated).is_err());
        assert!(SymbolTable::declare("", Conjugation::Fixed).is_err());
        assert!(SymbolTable::declare("i", Conjugation::Fixed).is_err());
    }

    #[test]
    fn opaque_classification() {
        assert!(SymbolTable::is_opaque(SymbolTable::zeta_odd(3).unwrap()));
        assert!(SymbolTable::is_opaque(SymbolTable::zetaprime_neg(4).unwrap()));
        assert!(!SymbolTable::is_opaque(SymbolTable::pi()));
        assert!(!SymbolTable::is_opaque(SymbolTable::log_prime(2).unwrap()));
    }
}
