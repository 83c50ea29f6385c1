package shop.service;

import shop.model.Invoice;

public class Billing {
    public String summary(Invoice invoice) {
        return invoice.getCustomer() + ": " + invoice.total();
    }
}
