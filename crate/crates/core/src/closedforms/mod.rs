//! Closed forms of the eight series families and the parameter-table engine.

pub mod series;
pub mod table2;
pub mod theorems;

pub use series::{Family, SeriesSpec, Trig};
pub use table2::{
    general_closed_form, general_closed_form_with, table2_consistency, table2_row, table2_row_id,
    table2_rows, GeneralFormulaParams, MLinear, RowDeviation, RowSummary, Table2Report,
    LITERAL_READING,
};
pub use theorems::{
    closed_form_eval, closed_form_eval_with, singular_limit_term, singular_limit_term_cos,
    ClosedFormResult, ZetaTerm,
};
