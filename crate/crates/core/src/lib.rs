pub mod exactalg;
pub mod cohomology;
pub mod delpezzo;
pub mod milnor;
pub mod stability;
pub mod vanishing;
pub mod vectorfields;
