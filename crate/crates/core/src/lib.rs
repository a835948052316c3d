//! Invariants of V-transverse links in circle bundles over surfaces.
//!
//! The layers build on each other:
//!
//! - [`surface`]: homology and the fundamental group of a closed surface
//! - [`extension`]: `pi_1` of the circle bundle, the Euler pairing and `h_V`
//! - [`moves`]: component states and elementary homotopy events
//! - [`nu`]: the figure-8 invariant and its cancellation decision
//! - [`catalog`]: example families, verdicts and Legendrian promotion
//! - [`script`] and [`report`]: the text formats used by the command line tool

pub mod catalog;
pub mod error;
pub mod extension;
pub mod moves;
pub mod nu;
pub mod report;
pub mod script;
pub mod surface;

pub use catalog::{
    build_example, promote_to_legendrian, simplicity_check, stab_correspondence, stab_tuple_consistent, table_all,
    table_verdict, verdict_for_script, ExampleFamily, LegendrianVerdict, Params, Simplicity, Tri, Verdict,
};
pub use error::{Error, EventError, Result, ScriptError};
pub use extension::{
    conj_act, euler_eval_torus, fiber_order_check, h_v, Ambient, BundleData, EVFiberElement, FieldData, LoopDescriptor,
    LoopGen, Pi1MElement, TorusKind,
};
pub use moves::{
    apply_event, normal_form_loop, ComponentDecl, ComponentState, HomotopyScript, MoveEvent, NormalForm, Sign,
};
pub use nu::{fig8_equal, is_zero, nu, obstruction_valid, Fig8Eq, Fig8Term, LiftClass, NuValue, NuVerdict};
pub use surface::{Conjugacy, H1Class, SurfaceBase, SurfaceGroup, SurfaceWord};
